# External libraries
import pytest

# Local libraries
from lib.bkl import (
	UNCOLORED, bkl, bkl_matrix, boundary_matrix, cbkl, cbkl_induced, coefficients, colored_variables, errors,
	fork_basis, identification_determinant, identification_residual, kernel_coefficient, kernel_vector
)
from lib.braid import BraidWord
from lib.ring import Matrix, VarSet, collapse

# Constants
Q, T = UNCOLORED.var('q'), UNCOLORED.var('t')


class TestComplex:
	def test_fork_basis(self):
		assert fork_basis(3) == [(1, 2), (1, 3), (2, 3)]
		assert len(fork_basis(4)) == 6
		with pytest.raises(errors.StrandBoundsError):
			fork_basis(1)

	@pytest.mark.parametrize('n', [2, 3, 4])
	def test_kernel_vectors_are_cycles(self, n):
		boundary = boundary_matrix(n)
		for j, k in fork_basis(n):
			assert (boundary @ kernel_vector(n, j, k)).is_zero()

	def test_uncoloured_coefficient(self):
		coefficient = kernel_coefficient(3, 1, 2, (1, 2))
		t = VarSet.of('t').var('t')
		uncoloured = coefficient.substitute({'q1': 1, 'q2': 1, 'q3': 1}, t.vars)
		assert uncoloured == (1 - t) * (1 + t) ** 2

	def test_fork_index(self):
		with pytest.raises(errors.ForkIndexError):
			kernel_vector(3, 2, 2)


class TestAction:
	def test_three_strand_generators(self):
		assert bkl_matrix(3, 1) == Matrix(UNCOLORED, [
			[T * Q ** 2, 0, Q ** 2 - Q],
			[0, 0, Q],
			[0, 1, 1 - Q]
		])
		assert bkl_matrix(3, 2) == Matrix(UNCOLORED, [
			[0, Q, 0],
			[1, 1 - Q, 0],
			[0, (Q ** 2 - Q) * T, T * Q ** 2]
		])

	@pytest.mark.parametrize('n', [3, 4])
	def test_braid_relations(self, n):
		for i in range(1, n - 1):
			left = BraidWord.parse(f'{i} {i + 1} {i}', n)
			right = BraidWord.parse(f'{i + 1} {i} {i + 1}', n)
			assert bkl(left) == bkl(right)
			assert cbkl(left) == cbkl(right)
		if n == 4:
			assert cbkl(BraidWord.parse('1 3', 4)) == cbkl(BraidWord.parse('3 1', 4))

	def test_coloured_collapses_to_uncoloured(self):
		word = BraidWord.parse('1 -2 1 2', 3)
		assert collapse(cbkl(word), 'q', 'q') == bkl(word)

	def test_induced_inverse(self):
		word = BraidWord.parse('1 2 -1', 3)
		assert cbkl_induced(word * word.inverse()).is_identity()


class TestIdentification:
	def test_coefficients_solve_the_pairings(self):
		assert identification_residual(coefficients()).is_zero()
		assert not identification_determinant().is_zero()

	def test_wrong_colour_fails(self):
		vars = colored_variables(4)
		q1, q2 = vars.var('q1'), vars.var('q2')
		candidate = Matrix(vars, [[q1 ** 2 - q1], [q1], [1 - q2]])
		assert not identification_residual(candidate).is_zero()
