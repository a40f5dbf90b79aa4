# External libraries
import pytest
from hypothesis import given, settings

# Local libraries
from lib.braid import BraidWord, errors as braid_errors, pure_generator
from lib.fox import (
	FreeWord, GroupRingElement, abelianize, artin_action, errors, fox_derivative,
	dictionary_matrix, dictionary_residual, fundamental_residual, g_basis_matrix, gassner_matrix, magnus_matrix,
	reduced_magnus_matrix, variables
)
from lib.gassner import burau, gamma
from lib.ring import VarSet, collapse
from tests.strategies import braid_words, free_words, pure_words

# Constants
T = VarSet.of('t').var('t')


def word(*letters: int) -> FreeWord:
	return FreeWord(tuple((abs(letter), 1 if letter > 0 else -1) for letter in letters))


class TestFreeGroup:
	def test_free_reduction(self):
		assert word(1, 2, -2, -1) == FreeWord()
		assert word(1, 2) * word(-2, 3) == word(1, 3)

	def test_exponent(self):
		with pytest.raises(errors.ExponentError):
			FreeWord(((1, 2),))

	@given(w=free_words())
	def test_inverse(self, w):
		assert w * w.inverse() == FreeWord()


class TestFoxDerivative:
	def test_conjugate(self):
		element = word(1, 2, -1)
		assert fox_derivative(element, 1) == GroupRingElement.one() - GroupRingElement.of(element)
		assert fox_derivative(element, 2) == GroupRingElement.of(word(1))

	@given(u=free_words(), v=free_words())
	def test_product_rule(self, u, v):
		for j in (1, 2, 3):
			expected = fox_derivative(u, j) + GroupRingElement.of(u) * fox_derivative(v, j)
			assert fox_derivative(u * v, j) == expected

	@given(w=free_words())
	def test_fundamental_formula(self, w):
		assert fundamental_residual(w, 3).is_zero()

	def test_bad_generator(self):
		with pytest.raises(errors.GeneratorBoundsError):
			fox_derivative(word(1), 0)

	def test_abelianize(self):
		vars = VarSet.indexed('t', 2)
		t1, t2 = vars.var('t1'), vars.var('t2')
		assert abelianize(word(1, 2, -1), vars) == t2
		assert abelianize(GroupRingElement.one() - GroupRingElement.of(word(1, 1)), vars) == 1 - t1 ** 2


class TestArtinAction:
	@given(left=braid_words(3, 3), right=braid_words(3, 3))
	def test_action_composes(self, left, right):
		for i in (1, 2, 3):
			x = FreeWord.generator(i)
			assert artin_action(left * right, x) == artin_action(left, artin_action(right, x))

	def test_braid_relation(self):
		left, right = BraidWord.parse('1 2 1', 3), BraidWord.parse('2 1 2', 3)
		for i in (1, 2, 3):
			x = FreeWord.generator(i)
			assert artin_action(left, x) == artin_action(right, x)

	@given(w=braid_words(4))
	def test_boundary_word_is_fixed(self, w):
		boundary = word(1, 2, 3, 4)
		assert artin_action(w, boundary) == boundary

	def test_generator_out_of_range(self):
		with pytest.raises(errors.GeneratorBoundsError):
			artin_action(BraidWord.parse('1', 2), FreeWord.generator(3))


class TestMagnusMatrices:
	def test_generator(self):
		vars = variables(2)
		t1, t2 = vars.var('t1'), vars.var('t2')
		assert magnus_matrix(BraidWord.parse('1', 2)).rows == ((1 - t2, t1), (vars.one, vars.zero))

	def test_pure_generator_invariants(self):
		vars = variables(2)
		t1, t2 = vars.var('t1'), vars.var('t2')
		matrix = gassner_matrix(pure_generator(2, 1, 2))
		assert matrix.trace() == 1 + t1 * t2
		assert matrix.det() == t1 * t2

	@pytest.mark.parametrize('n', [3, 4])
	def test_agrees_with_gamma_up_to_conjugacy(self, n):
		for r in range(1, n):
			for s in range(r + 1, n + 1):
				generator = pure_generator(n, r, s)
				assert gassner_matrix(generator).trace() == gamma(generator).trace()
				assert gassner_matrix(generator).det() == gamma(generator).det()

	@settings(max_examples=30, deadline=None)
	@given(w=braid_words(3, 4))
	def test_specializes_to_burau(self, w):
		assert collapse(gassner_matrix(w), 't', 't') == burau(w, T)

	@settings(max_examples=20, deadline=None)
	@given(u=pure_words(3), v=braid_words(3, 3))
	def test_multiplicative_after_pure_braids(self, u, v):
		assert gassner_matrix(u * v) == gassner_matrix(u) @ gassner_matrix(v)

	def test_reduced_shape(self):
		assert reduced_magnus_matrix(pure_generator(4, 2, 4)).shape == (3, 3)

	def test_reduced_needs_pure(self):
		with pytest.raises(braid_errors.NotPureError):
			reduced_magnus_matrix(BraidWord.parse('1', 3))

	def test_g_basis_last_column(self):
		vars = variables(3)
		matrix = g_basis_matrix(pure_generator(3, 1, 3))
		assert matrix.column(2) == (vars.zero, vars.zero, vars.one)
		assert reduced_magnus_matrix(pure_generator(3, 1, 3)) == matrix.delete_last()

	@settings(max_examples=30, deadline=None)
	@given(w=braid_words(3, 5))
	def test_rows_sum_to_one_at_t_equal_one(self, w):
		vars = variables(3)
		matrix = magnus_matrix(w).substitute({name: 1 for name in vars})
		for row in matrix.rows:
			assert sum(row, vars.zero) == 1


class TestDictionary:
	def test_matrix(self):
		vars = variables(2)
		t1, t2 = vars.var('t1'), vars.var('t2')
		assert dictionary_matrix(2).rows == ((1 - t1, vars.zero), (vars.zero, 1 - t2))

	def test_pure_generator_by_hand(self):
		vars = variables(2)
		t1, t2 = vars.var('t1'), vars.var('t2')
		word = pure_generator(2, 1, 2)
		assert gamma(word).rows == ((1 - t1 + t1 * t2, 1 - t1), (t1 - t1 * t2, t1))
		assert gassner_matrix(word).rows == ((1 - t1 + t1 * t2, 1 - t2), (t1 - t1 ** 2, t1))
		assert dictionary_residual(word).is_zero()

	@pytest.mark.parametrize('n', [3, 4])
	def test_every_pure_generator(self, n):
		for r in range(1, n):
			for s in range(r + 1, n + 1):
				assert dictionary_residual(pure_generator(n, r, s)).is_zero()

	@settings(max_examples=15, deadline=None)
	@given(w=pure_words(3))
	def test_pure_words(self, w):
		assert dictionary_residual(w).is_zero()

	def test_needs_pure(self):
		with pytest.raises(braid_errors.NotPureError):
			dictionary_residual(BraidWord.parse('1', 3))
