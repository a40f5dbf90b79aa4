# Native libraries
import json

# External libraries
import pytest

# Local libraries
from lib import harness
from lib.braid import BraidWord, Perm
from lib.gassner import burau, burau_block, gamma, induced_gassner
from lib.harness import errors
from lib.ring import Matrix, VarSet
from lib.ring import errors as ring_errors

# Constants
TVARS = VarSet.of('t')
T = TVARS.var('t')
DEFAULT_BOUNDS_SECONDS = 120


class TestSuites:
	@pytest.mark.parametrize('name, bounds', [
		('p-basis', {}),
		('dimensions', {'max_n': 4, 'max_m': 3}),
		('bkl-kernel', {'max_n': 3}),
		('ring-axioms', {'samples': 3}),
		('braid-relations-gassner', {'max_n': 3}),
		('conjugation', {'max_n': 3}),
		('bkl-relations', {'max_n': 4}),
		('lawrence-relations', {'max_n': 4, 'max_m': 2}),
		('specializations', {'max_n': 3, 'max_m': 2, 'samples': 2}),
		('fadell-neuwirth', {'max_n': 3, 'samples': 3}),
		('pure-multiplicativity', {'max_n': 3, 'max_m': 2, 'samples': 3}),
		('over-strand-convention', {}),
		('fox-gassner', {'max_n': 3})
	])
	def test_suite_passes(self, name, bounds):
		report = harness.run_suite(name, seed=1, **bounds)
		assert report.passed
		assert report.cases > 0
		assert report.suite == name

	def test_pure_multiplicativity_at_default_bounds(self, monkeypatch):
		monkeypatch.delenv('BRAIDREP_SAMPLES', raising=False)
		report = harness.run_suite('pure-multiplicativity', seed=42)
		assert report.params == {'max_m': 2, 'max_n': 4, 'samples': 50}
		assert report.passed
		assert report.wall_time < DEFAULT_BOUNDS_SECONDS

	def test_non_pure_right_factor_breaks_multiplicativity(self):
		report = harness.run_suite('pure-multiplicativity', seed=3, max_n=3, max_m=1, samples=0)
		assert report.passed
		assert report.cases == 1

	def test_reports_are_deterministic(self):
		first = harness.run_suite('ring-axioms', seed=7, samples=3)
		second = harness.run_suite('ring-axioms', seed=7, samples=3)
		assert first.to_json(timing=False) == second.to_json(timing=False)
		assert 'wall_time' not in json.loads(first.to_json(timing=False))
		assert 'wall_time' in first.to_dict()

	def test_seed_from_environment(self, monkeypatch):
		monkeypatch.setenv('BRAIDREP_SEED', '9')
		assert harness.run_suite('p-basis').seed == 9
		monkeypatch.delenv('BRAIDREP_SEED')
		assert harness.run_suite('p-basis').seed == 42

	def test_unknown_suite_suggests(self):
		with pytest.raises(errors.UnknownSuiteError, match='conjugation'):
			harness.run_suite('conjugaton')

	def test_every_suite_is_listed(self):
		assert 'fox-gassner' in harness.suite_names()
		assert len(harness.suite_names()) == len(harness.SUITES)


class TestResidualSummary:
	def test_vanishing(self):
		assert harness.residual_summary(Matrix.zeros(TVARS, 2, 2)) == (0, 0)
		assert harness.residual_summary(True) == (0, 0)
		assert harness.residual_summary([TVARS.zero, Matrix.zeros(TVARS, 1, 1)]) == (0, 0)

	def test_nonzero(self):
		residual = Matrix(TVARS, [[0, 1 + T], [T, 0]])
		assert harness.residual_summary(residual) == (2, 2)
		assert harness.residual_summary(False) == (1, 0)
		assert harness.residual_summary(T - 1) == (1, 2)

	def test_unsupported(self):
		with pytest.raises(errors.UnsupportedResultError):
			harness.residual_summary('residual')


class TestExport:
	def test_json(self):
		data = json.loads(harness.export_matrix(Matrix.identity(TVARS, 2), 'json'))
		assert data['vars'] == ['t']
		assert data['rows'][0][0] == [{'coeff': '1', 'exps': [0]}]
		assert data['rows'][0][1] == []

	def test_latex(self):
		payload = harness.export_matrix(Matrix.identity(TVARS, 2), 'latex')
		assert payload == b'\\begin{pmatrix} 1 & 0 \\\\ 0 & 1 \\end{pmatrix}\n'

	def test_csv(self):
		payload = harness.export_matrix(Matrix.identity(TVARS, 2), 'csv-monomial')
		assert payload == b'row,col,coeff,t\n1,1,1,0\n2,2,1,0\n'

	def test_graded_map(self):
		graded = induced_gassner(BraidWord.parse('1', 2))
		lines = harness.export_matrix(graded, 'csv-monomial').decode('utf8').splitlines()
		assert lines[0] == 'src,dst,row,col,coeff,t1,t2'
		data = json.loads(harness.export_matrix(graded, 'json'))
		assert {tuple(block['src']) for block in data['blocks']} == {(1, 2), (2, 1)}

	def test_identical_input_gives_identical_bytes(self):
		word = BraidWord.parse('1 -2 1', 3)
		for format in harness.EXPORTERS:
			assert harness.export_matrix(gamma(word), format) == harness.export_matrix(gamma(word), format)

	def test_unknown_format(self):
		with pytest.raises(errors.UnknownFormatError):
			harness.export_matrix(Matrix.identity(TVARS, 2), 'xml')


class TestFamilies:
	def test_represent(self):
		word = BraidWord.parse('1', 2)
		assert harness.represent('burau', word) == burau(word, T)
		assert harness.represent('gassner', word, mode='induced') == induced_gassner(word)
		assert harness.represent('lawrence', BraidWord.parse('1', 3), 2).shape == (3, 3)

	def test_unsupported_mode(self):
		with pytest.raises(errors.UnsupportedModeError):
			harness.represent('burau', BraidWord.parse('1', 2), mode='colored')
		with pytest.raises(errors.UnsupportedModeError):
			harness.represent('quant', BraidWord.parse('1', 2), mode='colored')

	def test_unknown_family_suggests(self):
		with pytest.raises(errors.UnknownFamilyError, match='lawrence'):
			harness.find_family('lawrense')
		assert 'fox' in harness.family_names()


class TestSpecialize:
	def test_collapse_colours(self):
		word = BraidWord.parse('1', 2)
		assert harness.specialize(gamma(word), 't1=t,t2=t') == burau(word, T)

	def test_bare_name_collapses_colours(self):
		word = BraidWord.parse('1 -2', 3)
		assert harness.specialize(gamma(word), 't') == burau(word, T)
		with pytest.raises(errors.AssignmentError):
			harness.specialize(burau(word, T), 's')

	def test_invert_variable(self):
		word = BraidWord.parse('1', 2)
		assert harness.specialize(burau(word, T), 't=t^-1') == burau_block(2, 1, T ** -1)

	def test_unassigned_variables_stay(self):
		result = harness.specialize(gamma(BraidWord.parse('1 2', 3)), 't3=1')
		assert result.vars.names == ('t1', 't2')

	def test_graded_map(self):
		graded = harness.specialize(induced_gassner(BraidWord.parse('1', 2)), 't1=s, t2=s')
		assert graded.vars.names == ('s',)
		assert graded.target(Perm.identity(2)) == Perm((2, 1))

	@pytest.mark.parametrize('raw', ['t1', '=t', '1x=t', 't1=t,'])
	def test_malformed(self, raw):
		with pytest.raises(errors.AssignmentError):
			harness.specialize(gamma(BraidWord.parse('1', 2)), raw)

	def test_unknown_variable(self):
		with pytest.raises(ring_errors.UnknownVariableError):
			harness.specialize(gamma(BraidWord.parse('1', 2)), 'z=t')
