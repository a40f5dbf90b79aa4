"""Laurent polynomial arithmetic, quantum numbers and matrices over the Laurent ring."""

# External libraries
import pytest
from hypothesis import given, settings, strategies as st

# Local libraries
from lib.ring import (
	LaurentPoly, Matrix, VarSet, collapse, errors, inverse, parse,
	q_binomial, q_factorial, q_number, t_binomial, t_factorial, t_number, t_trinomial, total
)
from tests.strategies import XY, laurent_polys, units


# ---------------------> Variable sets


class TestVarSet:
	def test_indexed_names(self):
		assert VarSet.indexed('q', 3, 't').names == ('q1', 'q2', 'q3', 't')

	def test_duplicate_names_rejected(self):
		with pytest.raises(errors.DuplicateVariableError):
			VarSet.of('s', 's')

	def test_unknown_variable(self, xy):
		with pytest.raises(errors.UnknownVariableError):
			xy.var('z')


# ---------------------> Ring axioms


class TestRingAxioms:
	@given(a=laurent_polys(), b=laurent_polys())
	def test_commutativity(self, a, b):
		assert a + b == b + a
		assert a * b == b * a

	@settings(max_examples=50)
	@given(a=laurent_polys(), b=laurent_polys(), c=laurent_polys())
	def test_associativity(self, a, b, c):
		assert (a + b) + c == a + (b + c)
		assert (a * b) * c == a * (b * c)

	@settings(max_examples=50)
	@given(a=laurent_polys(), b=laurent_polys(), c=laurent_polys())
	def test_distributivity(self, a, b, c):
		assert a * (b + c) == a * b + a * c

	@given(a=laurent_polys())
	def test_additive_inverse(self, a):
		assert (a - a).is_zero()
		assert a + XY.zero == a
		assert a * XY.one == a

	@given(u=units())
	def test_units_invert(self, u):
		assert u * u.inverse() == 1
		assert u ** -2 * u ** 2 == 1

	def test_non_unit_has_no_inverse(self, xy):
		with pytest.raises(errors.NotAUnitError):
			(1 + xy.var('x')).inverse()

	@settings(max_examples=50)
	@given(a=laurent_polys(max_terms=5), power=st.tuples(st.integers(-3, 3), st.integers(-3, 3)), coeff=st.integers(-4, 4))
	def test_single_term_factors(self, a, power, coeff):
		monomial = LaurentPoly(XY, {power: coeff})
		expanded = LaurentPoly(XY, {
			(x + power[0], y + power[1]): c * coeff for (x, y), c in a.terms
		})
		assert a * monomial == expanded == monomial * a
		assert (a * monomial).terms == tuple(sorted(expanded.terms))

	def test_sum_of_one_term_is_kept(self, xy):
		x = xy.var('x')
		assert total([xy.zero, x, xy.zero], xy) is x
		assert total([x, -x], xy).is_zero()
		assert hash(total([x, xy.var('y')], xy)) == hash(xy.var('y') + x)

	def test_mismatched_rings(self, xy, st_ring):
		with pytest.raises(errors.VarSetMismatchError):
			xy.var('x') + st_ring.var('s')


# ---------------------> Substitution and parsing


class TestSubstitution:
	@settings(max_examples=50)
	@given(a=laurent_polys(), b=laurent_polys(), image=units())
	def test_substitution_is_a_ring_map(self, a, b, image):
		images = {'x': image}
		assert (a * b).substitute(images) == a.substitute(images) * b.substitute(images)
		assert (a + b).substitute(images) == a.substitute(images) + b.substitute(images)

	def test_collapse_to_fewer_variables(self):
		vars = VarSet.of('t1', 't2')
		target = VarSet.of('t')
		poly = vars.var('t1') * vars.var('t2') ** -1 + vars.var('t2')
		assert poly.substitute({'t1': target.var('t'), 't2': target.var('t')}, target) == 1 + target.var('t')

	def test_negative_power_needs_unit_image(self, xy):
		with pytest.raises(errors.NonInvertibleImageError):
			(xy.var('x') ** -1).substitute({'x': 1 + xy.var('y')})

	@given(a=laurent_polys())
	def test_parse_reads_printed_form(self, a):
		assert parse(str(a), XY) == a

	def test_parse_exponents(self, st_ring):
		s, t = st_ring.var('s'), st_ring.var('t')
		assert parse('2*s^2*t^-1 - (1 + t)^2', st_ring) == 2 * s ** 2 * t ** -1 - (1 + t) ** 2
		assert parse('s^{-3}', st_ring) == s ** -3

	@pytest.mark.parametrize('raw', ['s^', '2 +', 's t', '(s'])
	def test_parse_errors(self, st_ring, raw):
		with pytest.raises(errors.ParseError):
			parse(raw, st_ring)


# ---------------------> Output


class TestOutput:
	def test_pretty_print(self, st_ring):
		s, t = st_ring.var('s'), st_ring.var('t')
		assert str(s ** 2 * t ** -1 + s ** 2) == 's^2*t^-1 + s^2'
		assert str(st_ring.zero) == '0'

	def test_latex(self, st_ring):
		s, t = st_ring.var('s'), st_ring.var('t')
		assert (s ** 2 * t ** -1 + s ** 2).to_latex() == 's^{2}t^{-1}+s^{2}'
		assert (-s).to_latex() == '-s'

	def test_json(self, st_ring):
		poly = 3 * st_ring.var('s') - 1
		data = poly.to_json()
		assert data['vars'] == ['s', 't']
		assert LaurentPoly.from_json(data) == poly


# ---------------------> Quantum numbers


class TestQuantumNumbers:
	def test_symmetric_numbers(self):
		q = VarSet.of('q').var('q')
		assert q_number(3, q) == q ** 2 + 1 + q ** -2
		assert q_factorial(3, q) == q_number(2, q) * q_number(3, q)
		assert q_binomial(4, 2, q) == q ** 4 + q ** 2 + 2 + q ** -2 + q ** -4

	def test_one_sided_numbers(self):
		t = VarSet.of('t').var('t')
		assert t_number(3, t) == 1 + t + t ** 2
		assert t_binomial(4, 2, t) == 1 + t + 2 * t ** 2 + t ** 3 + t ** 4
		assert t_trinomial(3, 1, 1, 1, t) == (1 + t) * (1 + t + t ** 2)

	@given(i=st.integers(0, 3), j=st.integers(0, 3), k=st.integers(0, 3))
	def test_trinomial_is_a_factorial_ratio(self, i, j, k):
		t = VarSet.of('t').var('t')
		total = i + j + k
		product = t_trinomial(total, i, j, k, t) * t_factorial(i, t) * t_factorial(j, t) * t_factorial(k, t)
		assert product == t_factorial(total, t)

	@given(k=st.integers(0, 6), l=st.integers(0, 6))
	def test_binomial_symmetry(self, k, l):
		q = VarSet.of('q').var('q')
		if l <= k:
			assert q_binomial(k, l, q) == q_binomial(k, k - l, q)
			assert q_binomial(k, l, q) == q_binomial(k, l, q ** -1)

	def test_bad_composition(self):
		t = VarSet.of('t').var('t')
		with pytest.raises(errors.InvalidCompositionError):
			t_trinomial(3, 1, 1, 0, t)
		with pytest.raises(errors.InvalidBoundsError):
			t_binomial(2, 3, t)


# ---------------------> Matrices


class TestMatrix:
	def test_burau_block_inverse(self, st_ring):
		t = st_ring.var('t')
		block = Matrix(st_ring, [[1 - t, 1], [t, 0]])
		assert block.det() == -t
		assert block @ block.inverse() == Matrix.identity(st_ring, 2)
		assert block.inverse() @ block == Matrix.identity(st_ring, 2)

	def test_inverse_splits_blocks(self, st_ring):
		s, t = st_ring.var('s'), st_ring.var('t')
		matrix = Matrix(st_ring, [[s, 0, 0], [0, 1 - t, 1], [0, t, 0]])
		assert inverse(matrix) @ matrix == Matrix.identity(st_ring, 3)

	def test_not_invertible(self, st_ring):
		t = st_ring.var('t')
		with pytest.raises(errors.NotInvertibleError):
			Matrix(st_ring, [[1, 1], [1, t]]).inverse()

	def test_char_poly(self, xy):
		x, y = xy.var('x'), xy.var('y')
		matrix = Matrix(xy, [[x, 1], [y, 2]])
		assert matrix.char_poly() == [xy.one, -(x + 2), 2 * x - y]

	@settings(max_examples=25, deadline=None)
	@given(entries=st.lists(laurent_polys(max_terms=2), min_size=18, max_size=18))
	def test_determinant_is_multiplicative(self, entries):
		left = Matrix(XY, [entries[0:3], entries[3:6], entries[6:9]])
		right = Matrix(XY, [entries[9:12], entries[12:15], entries[15:18]])
		assert (left @ right).det() == left.det() * right.det()

	def test_shape_errors(self, xy):
		with pytest.raises(errors.ShapeMismatchError):
			Matrix.identity(xy, 2) @ Matrix.identity(xy, 3)
		with pytest.raises(errors.ShapeMismatchError):
			Matrix(xy, [[1, 2], [3]])

	def test_delete_last_and_trace(self, xy):
		x = xy.var('x')
		matrix = Matrix(xy, [[x, 1, 0], [0, 2, 0], [5, 0, x]])
		assert matrix.delete_last() == Matrix(xy, [[x, 1], [0, 2]])
		assert matrix.trace() == 2 * x + 2
		assert len(matrix.nonzero_entries()) == 5

	def test_collapse(self):
		vars = VarSet.indexed('q', 2, 't')
		matrix = Matrix(vars, [[vars.var('q1'), vars.var('t')], [0, vars.var('q2') ** 2]])
		collapsed = collapse(matrix, 'q', 'q')
		target = VarSet.of('q', 't')
		assert collapsed == Matrix(target, [[target.var('q'), target.var('t')], [0, target.var('q') ** 2]])
