"""Noodle and fork pairings used to pin the coefficients of σ_(j-1) on v_(j,k).

The pairings themselves come from intersecting lifted surfaces and are stored
as values. With F the image of F_(2,4) under σ1 in four strands and
F = A F^τ_(1,2) + B F^τ_(1,4) + C F^τ_(2,4) for τ = (1 2), each noodle gives one
linear condition on (A, B, C).
"""

from __future__ import annotations

# Local libraries
from .complex import COLOR_PREFIX, LOOP_VARIABLE, colored_variables
from lib.braid import Perm
from lib.ring import LaurentPoly, Matrix, VarSet

# Constants
STRANDS = 4
TRANSPORT = Perm.transposition(STRANDS, 1)


# ---------------------> Pairing tables


def standard_pairing(i: int, j: int, k: int, vars: VarSet, transport: Perm | None = None) -> LaurentPoly:
	"""⟨N_i, F_(j,k)⟩ with the colour of puncture i carried along `transport`."""

	color = transport.inverse()(i) if transport else i
	q, t = vars.var(f'{COLOR_PREFIX}{color}'), vars.var(LOOP_VARIABLE)

	if i == j:
		return -q
	if i == k:
		return q ** -1 * t ** -1
	if j < i < k:
		return q ** -1 * t ** -1 - t ** -1 + 1 + q
	return vars.zero

def twisted_fork_pairings(vars: VarSet) -> dict[str, LaurentPoly]:
	# ⟨N, F⟩ for the fork F itself
	q = lambda i: vars.var(f'{COLOR_PREFIX}{i}')
	t = vars.var(LOOP_VARIABLE)
	return {
		'N1': -q(2) * q(1) ** 2,
		'N3': q(3) ** -1 * t ** -1 - t ** -1 + 1 + q(3),
		'N4': q(4) ** -1 * t ** -1,
		'N23': q(1) * (1 - q(3)) * (q(3) ** -1 * t ** -1 + 1)
	}

def double_noodle_pairings(vars: VarSet) -> list[LaurentPoly]:
	"""⟨N_(2,3), F^τ_(1,2)⟩, ⟨N_(2,3), F^τ_(1,4)⟩, ⟨N_(2,3), F^τ_(2,4)⟩."""

	q1q3 = vars.var(f'{COLOR_PREFIX}1') * vars.var(f'{COLOR_PREFIX}3')
	t = vars.var(LOOP_VARIABLE)
	return [
		q1q3 ** -1 * t ** -1,
		q1q3 ** -1 * t ** -1 - t ** -1 + 1 - q1q3,
		-q1q3
	]


# ---------------------> Identification


def identification_system() -> tuple[Matrix, Matrix]:
	"""Rows N1, N3, N4, N23 of the linear system in (A, B, C), with its right-hand side."""

	vars = colored_variables(STRANDS)
	forks = [(1, 2), (1, 4), (2, 4)]
	fork = twisted_fork_pairings(vars)

	rows, rhs = [], []
	for noodle in (1, 3, 4):
		rows.append([standard_pairing(noodle, j, k, vars, TRANSPORT) for j, k in forks])
		rhs.append([fork[f'N{noodle}']])
	rows.append(double_noodle_pairings(vars))
	rhs.append([fork['N23']])
	return Matrix(vars, rows), Matrix(vars, rhs)

def coefficients(color: int = 1) -> Matrix:
	"""(A, B, C) = (q^2 - q, q, 1 - q) in the colour q = q_color."""

	vars = colored_variables(STRANDS)
	q = vars.var(f'{COLOR_PREFIX}{color}')
	return Matrix(vars, [[q ** 2 - q], [q], [1 - q]])

def identification_residual(candidate: Matrix) -> Matrix:
	system, rhs = identification_system()
	return system @ candidate - rhs

def identification_determinant() -> LaurentPoly:
	"""Determinant of the N1, N3, N23 rows, nonzero so the solution is unique."""

	system, _ = identification_system()
	return system.submatrix([0, 1, 3], [0, 1, 2]).det()
