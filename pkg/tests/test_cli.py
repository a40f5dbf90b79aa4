# Native libraries
import json

# External libraries
import pytest

# Local libraries
from main import main


pytestmark = pytest.mark.usefixtures('workspace')


class TestRep:
	def test_uncoloured_bkl(self, capsys):
		assert main(['rep', 'bkl', '--n', '3', '--braid', '1']) == 0
		data = json.loads(capsys.readouterr().out)
		assert data['vars'] == ['q', 't']
		assert len(data['rows']) == 3

	def test_specialize_and_format(self, capsys):
		assert main(['rep', 'gassner', '--n=2', '--braid=1', '--s', 't1=t,t2=t', '--format=csv-monomial']) == 0
		assert capsys.readouterr().out.splitlines()[0] == 'row,col,coeff,t'

	def test_induced(self, capsys):
		assert main(['rep', 'lawrence', '--n=3', '--m=1', '--braid=1 -2', '--induced']) == 0
		assert len(json.loads(capsys.readouterr().out)['blocks']) == 6

	@pytest.mark.parametrize('argv', [
		['rep', 'bkk', '--n=3', '--braid=1'],
		['rep', 'bkl', '--braid=1'],
		['rep', 'bkl', '--n=3', '--braid=1 x'],
		['rep', 'quant', '--n=3', '--braid=1', '--colored'],
		['rep', 'lawrence', '--n=3', '--braid=1', '--basis=forks'],
		['rep', 'bkl', '--n=3', '--braid=1', '--format=xml'],
		['rep', 'bkl', '--n=3', '--braid=1', '--colored', '--induced']
	])
	def test_usage_errors(self, argv, capsys):
		assert main(argv) == 2
		captured = capsys.readouterr()
		assert captured.out == ''
		assert captured.err

	def test_unknown_family_suggestion(self, capsys):
		main(['rep', 'bkk', '--n=3', '--braid=1'])
		assert '`bkl`' in capsys.readouterr().err

	def test_irrelevant_arguments_are_reported(self, capsys):
		assert main(['rep', 'bkl', '--n=3', '--braid=1', '--bogus']) == 0
		assert 'Irrelevant flags: --bogus' in capsys.readouterr().err


class TestVerify:
	def test_single_suite(self, capsys):
		assert main(['verify', 'p-basis', '--no-timing']) == 0
		report = json.loads(capsys.readouterr().out)
		assert report['suite'] == 'p-basis'
		assert report['failures'] == []
		assert 'wall_time' not in report

	def test_same_seed_same_report(self, capsys):
		main(['verify', 'ring-axioms', '--seed=3', '--samples=2', '--no-timing'])
		first = capsys.readouterr().out
		main(['verify', 'ring-axioms', '--seed=3', '--samples=2', '--no-timing'])
		assert capsys.readouterr().out == first

	def test_unknown_suite(self):
		assert main(['verify', 'conjugaton']) == 2


class TestFox:
	def test_gassner(self, capsys):
		assert main(['fox', 'gassner', '--n=2', '--braid=1']) == 0
		assert json.loads(capsys.readouterr().out)['vars'] == ['t1', 't2']

	def test_reduced_needs_pure(self):
		assert main(['fox', 'reduced', '--n=3', '--braid=1']) == 2

	def test_unknown_variant(self):
		assert main(['fox', 'magnus', '--n=2', '--braid=1']) == 2


class TestDispatch:
	def test_no_command(self, capsys):
		assert main([]) == 2
		assert 'verify' in capsys.readouterr().err

	def test_unknown_command(self, capsys):
		assert main(['verif']) == 2
		assert '`verify`' in capsys.readouterr().err

	def test_help(self, capsys):
		assert main(['help']) == 0
		out = capsys.readouterr().out
		for name in ('fox', 'help', 'rep', 'verify'):
			assert f'braidrep {name} ' in out

	def test_help_for_one_command(self, capsys):
		assert main(['help', 'rep']) == 0
		assert capsys.readouterr().out.startswith('braidrep rep <(str) family>')
		assert main(['help', 'nope']) == 2

	def test_logs_are_written(self, workspace):
		main(['help'])
		assert (workspace / 'logs' / 'main.log').exists()
