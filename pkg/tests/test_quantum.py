# External libraries
import pytest

# Local libraries
from lib.braid import BraidWord, Perm, pure_generator
from lib.quantum import (
	PINNED_SIGN, VermaTrunc, check_conjugation, errors, phi, quant, r_matrix_local, r_matrix_weight1, verma_action
)
from lib.ring import Matrix, VarSet, collapse


class TestVerma:
	def test_weights(self):
		verma = VermaTrunc(2)
		q, s = verma.q, verma.s
		assert verma.action('K', 1) == [verma.vars.zero, s * q ** -2, verma.vars.zero]
		assert verma.action('E', 0) == [verma.vars.zero] * 3
		assert verma_action('F', 0)[1] == s - s ** -1

	def test_commutator_below_the_cutoff(self):
		verma = VermaTrunc(3)
		e, f, k = verma.matrix('E'), verma.matrix('F'), verma.matrix('K')
		rows, below = list(range(4)), list(range(3))
		assert (e @ f - f @ e).submatrix(rows, below) == (k - k.inverse()).submatrix(rows, below)

	def test_divided_powers(self):
		verma = VermaTrunc(3)
		q = verma.q
		f = verma.matrix('F')
		assert f @ f == verma.matrix('F', 2).scale(q + q ** -1)

	def test_errors(self):
		verma = VermaTrunc(2)
		with pytest.raises(errors.CutoffError):
			verma.action('K', 3)
		with pytest.raises(errors.CutoffError):
			verma.action('F', 2)
		with pytest.raises(errors.UnknownGeneratorError):
			verma.action('X', 0)


class TestRMatrix:
	def test_weight_one_block(self):
		vars = VarSet.of('a', 'b')
		a, b = vars.var('a'), vars.var('b')
		assert r_matrix_weight1(a, b) == Matrix(vars, [[1, 0, 0], [0, b ** 2 - 1, b], [0, a, 0]])

	def test_braid_relation_needs_negative_vacuum(self):
		s = VarSet.of('s').var('s')
		r1, r2 = (r_matrix_local(3, i, s, vacuum=-1) for i in (1, 2))
		assert r1 @ r2 @ r1 == r2 @ r1 @ r2
		r1, r2 = (r_matrix_local(3, i, s) for i in (1, 2))
		assert r1 @ r2 @ r1 != r2 @ r1 @ r2

	@pytest.mark.parametrize('n', [2, 3, 4])
	def test_matches_the_weight_one_action(self, n):
		s = VarSet.of('s').var('s')
		identity = Perm.identity(n)
		weight_one = list(range(1, n + 1))
		for i in range(1, n):
			local = r_matrix_local(n, i, s, vacuum=-1).submatrix(weight_one, weight_one)
			action = collapse(quant(BraidWord.generator(n, i), -1, [identity]).matrix(identity), 's', 's')
			assert local == -action


class TestQuant:
	def test_generator_block(self):
		vars = VarSet.indexed('s', 2)
		s1, s2 = vars.var('s1'), vars.var('s2')
		identity = Perm.identity(2)
		block = quant(BraidWord.parse('1', 2), sources=[identity]).matrix(identity)
		assert block == Matrix(vars, [[1 - s1 ** 2, s1], [s2, 0]])

	def test_braid_relation(self):
		assert quant(BraidWord.parse('1 2 1', 3)) == quant(BraidWord.parse('2 1 2', 3))

	def test_sign_choice(self):
		with pytest.raises(errors.SignChoiceError):
			quant(BraidWord.parse('1', 2), 0)


class TestConjugation:
	@pytest.mark.parametrize('n', [2, 3])
	def test_pinned_sign_conjugates(self, n):
		assert PINNED_SIGN == 1
		for k in range(1, n):
			assert check_conjugation(BraidWord.generator(n, k)).is_zero()

	def test_other_sign_fails(self):
		assert not check_conjugation(BraidWord.generator(2, 1), -1).is_zero()

	def test_pure_word(self):
		assert check_conjugation(pure_generator(3, 1, 3) * pure_generator(3, 1, 2) ** -1).is_zero()

	def test_phi_is_diagonal(self):
		vars = VarSet.indexed('s', 2)
		s1, s2 = vars.var('s1'), vars.var('s2')
		identity = Perm.identity(2)
		block = phi(2, [identity]).matrix(identity)
		assert block == Matrix(vars, [[(1 - s1 ** 2) * (s1 * s2) ** -1, 0], [0, (1 - s2 ** 2) * s2 ** -1]])
