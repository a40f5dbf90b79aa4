from __future__ import annotations

# Native libraries
from itertools import combinations

# Local libraries
from . import errors
from lib.ring import LaurentPoly, Matrix, VarSet

# Constants
COLOR_PREFIX = 'q'
LOOP_VARIABLE = 't'


# ---------------------> Index sets


def colored_variables(n: int) -> VarSet:
	return VarSet.indexed(COLOR_PREFIX, n, LOOP_VARIABLE)

def fork_basis(n: int) -> list[tuple[int, int]]:
	"""Pairs j < k in lexicographic order, the order of the v_(j,k)."""

	if n < 2:
		raise errors.StrandBoundsError(n)
	return list(combinations(range(1, n + 1), 2))

def relator_basis(n: int) -> list[tuple[int, int]]:
	# Relators r_(j,k) with j <= k
	if n < 2:
		raise errors.StrandBoundsError(n)
	return [(j, k) for j in range(1, n + 1) for k in range(j, n + 1)]


# ---------------------> Chain complex


def boundary_matrix(n: int) -> Matrix:
	"""∂: C2 -> C1 with rows x1..xn, y and one column per relator r_(j,k)."""

	vars = colored_variables(n)
	t = vars.var(LOOP_VARIABLE)
	q = lambda i: vars.var(f'{COLOR_PREFIX}{i}')

	columns = []
	for j, k in relator_basis(n):
		column = [vars.zero] * (n + 1)
		if j == k:
			column[j - 1] = (q(j) * t + 1) * (1 - t)
			column[n] = (q(j) * t + 1) * (q(j) - 1)
		else:
			column[j - 1] = 1 - q(k)
			column[k - 1] = t * (q(j) - 1)
			column[n] = (1 - q(k)) * (q(j) - 1)
		columns.append(column)
	return Matrix.from_columns(vars, columns)

def kernel_vector(n: int, j: int, k: int) -> Matrix:
	"""v_(j,k) as a column over the relator basis; ∂ kills it."""

	if not 1 <= j < k <= n:
		raise errors.ForkIndexError(n, j, k)

	vars = colored_variables(n)
	t = vars.var(LOOP_VARIABLE)
	qj, qk = vars.var(f'{COLOR_PREFIX}{j}'), vars.var(f'{COLOR_PREFIX}{k}')

	coefficients = {
		(j, j): -(1 - qk) * (qk * t + 1),
		(j, k): (1 - t) * (qk * t + 1) * (qj * t + 1),
		(k, k): -t * (qj - 1) * (qj * t + 1)
	}
	return Matrix(vars, [[coefficients.get(pair, vars.zero)] for pair in relator_basis(n)])

def kernel_coefficient(n: int, j: int, k: int, pair: tuple[int, int]) -> LaurentPoly:
	index = relator_basis(n).index(pair)
	return kernel_vector(n, j, k)[index, 0]
