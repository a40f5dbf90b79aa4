"""Comparisons of the code sequence basis with forks (three strands, level two) and with reduced Burau (level one)."""

from __future__ import annotations

# Native libraries
from functools import reduce

# Local libraries
from . import errors
from .action import COLOR_PREFIX, LOOP_VARIABLE, UNCOLORED, lawrence_action_matrix, lawrence_matrix
from .codes import CodeSequenceIndex, enumerate_codes
from lib.bkl import bkl_action_matrix
from lib.gassner import reduced_burau_block
from lib.ring import LaurentPoly, Matrix, VarSet, parse, t_factorial

# Constants
FORK_SIZE = (3, 2)


# ---------------------> Forks against code sequences


def multifork_weight(code: CodeSequenceIndex, t: LaurentPoly) -> LaurentPoly:
	"""F(ks) = Π (k_i)_t! U(ks)."""

	return reduce(lambda acc, k: acc * t_factorial(k, t), code.ks, t.vars.one)

def fork_decomposition(j: int, k: int, t: LaurentPoly) -> dict[CodeSequenceIndex, LaurentPoly]:
	# Standard forks of three punctures in multiforks F(2,0), F(1,1), F(0,2)
	one = t.vars.one
	decompositions = {
		(1, 2): {(2, 0): one},
		(1, 3): {(2, 0): one, (1, 1): 1 + t, (0, 2): one},
		(2, 3): {(0, 2): one}
	}
	if (j, k) not in decompositions:
		raise errors.CodeSequenceError((j, k), 2)
	return {CodeSequenceIndex(ks): coefficient for ks, coefficient in decompositions[j, k].items()}

def p_from_forks(vars: VarSet = UNCOLORED) -> Matrix:
	"""Columns are the forks F_(1,2), F_(1,3), F_(2,3) written over code sequences."""

	t = vars.var(LOOP_VARIABLE)
	codes = enumerate_codes(*FORK_SIZE)
	columns = []
	for pair in ((1, 2), (1, 3), (2, 3)):
		decomposition = fork_decomposition(*pair, t)
		columns.append([
			decomposition.get(code, vars.zero) * multifork_weight(code, t) for code in codes
		])
	return Matrix.from_columns(vars, columns)

def change_of_basis_p(vars: VarSet = UNCOLORED) -> Matrix:
	t = vars.var(LOOP_VARIABLE)
	return Matrix(vars, [
		[1 + t, 1 + t, 0],
		[0, 1 + t, 0],
		[0, 1 + t, 1 + t]
	])

def p_residuals(vars: VarSet = UNCOLORED) -> list[Matrix]:
	"""P BKL_i(s, 1/t) - L_i(s, t) P for i = 1, 2; P is not invertible so both sides are multiplied out."""

	n, m = FORK_SIZE
	s, t = vars.var(COLOR_PREFIX), vars.var(LOOP_VARIABLE)
	p = change_of_basis_p(vars)
	return [
		p @ bkl_action_matrix(n, i, s, t ** -1) - lawrence_action_matrix(n, m, i, s, t) @ p
		for i in (1, 2)
	]


# ---------------------> Level one against reduced Burau


def burau_dictionary(n: int, vars: VarSet = UNCOLORED) -> Matrix:
	"""D = diag(1, 1/s, ..., 1/s^(n-2)) with L_i D = D reducedBurau_i at t = s."""

	s = vars.var(COLOR_PREFIX)
	return Matrix.from_entries(vars, n - 1, {(k, k): s ** -k for k in range(n - 1)})

def burau_residual(n: int, i: int, vars: VarSet = UNCOLORED) -> Matrix:
	s = vars.var(COLOR_PREFIX)
	d = burau_dictionary(n, vars)
	return lawrence_matrix(n, 1, i) @ d - d @ reduced_burau_block(n, i, s)


# ---------------------> Four strands


# Images of U(k1,k2,k3) under σ1, σ2, σ3 on four punctures, written out term by term.
# `s` is the colour of the crossing, the strand at slot i.
FOUR_STRANDS: dict[int, dict[int, dict[tuple[int, ...], list[tuple[tuple[int, ...], str]]]]] = {
	1: {
		1: {
			(1, 0, 0): [((1, 0, 0), '-s')],
			(0, 1, 0): [((0, 1, 0), '1'), ((1, 0, 0), 's')],
			(0, 0, 1): [((0, 0, 1), '1')]
		},
		2: {
			(1, 0, 0): [((1, 0, 0), '1'), ((0, 1, 0), '1')],
			(0, 1, 0): [((0, 1, 0), '-s')],
			(0, 0, 1): [((0, 0, 1), '1'), ((0, 1, 0), 's')]
		},
		3: {
			(1, 0, 0): [((1, 0, 0), '1')],
			(0, 1, 0): [((0, 1, 0), '1'), ((0, 0, 1), '1')],
			(0, 0, 1): [((0, 0, 1), '-s')]
		}
	},
	2: {
		1: {
			(2, 0, 0): [((2, 0, 0), 's^2*t^-1')],
			(1, 1, 0): [((1, 1, 0), '-s'), ((2, 0, 0), '-s^2*(1 + t^-1)')],
			(1, 0, 1): [((1, 0, 1), '-s')],
			(0, 2, 0): [((0, 2, 0), '1'), ((1, 1, 0), 's'), ((2, 0, 0), 's^2')],
			(0, 1, 1): [((0, 1, 1), '1'), ((1, 0, 1), 's')],
			(0, 0, 2): [((0, 0, 2), '1')]
		},
		2: {
			(2, 0, 0): [((2, 0, 0), '1'), ((1, 1, 0), '1'), ((0, 2, 0), '1')],
			(1, 1, 0): [((1, 1, 0), '-s'), ((0, 2, 0), '-s*(1 + t^-1)')],
			(1, 0, 1): [((1, 0, 1), '1'), ((0, 1, 1), '1'), ((1, 1, 0), 's'), ((0, 2, 0), 's*(1 + t^-1)')],
			(0, 2, 0): [((0, 2, 0), 's^2*t^-1')],
			(0, 1, 1): [((0, 1, 1), '-s'), ((0, 2, 0), '-s^2*(1 + t^-1)')],
			(0, 0, 2): [((0, 0, 2), '1'), ((0, 1, 1), 's'), ((0, 2, 0), 's^2')]
		},
		3: {
			(2, 0, 0): [((2, 0, 0), '1')],
			(1, 1, 0): [((1, 1, 0), '1'), ((1, 0, 1), '1')],
			(1, 0, 1): [((1, 0, 1), '-s')],
			(0, 2, 0): [((0, 2, 0), '1'), ((0, 1, 1), '1'), ((0, 0, 2), '1')],
			(0, 1, 1): [((0, 1, 1), '-s'), ((0, 0, 2), '-s*(1 + t^-1)')],
			(0, 0, 2): [((0, 0, 2), 's^2*t^-1')]
		}
	}
}

def four_strand_matrix(m: int, i: int, vars: VarSet) -> Matrix:
	"""σ_i on four punctures at level 1 or 2 from the written-out images, coloured by s_i."""

	if m not in FOUR_STRANDS or i not in FOUR_STRANDS[m]:
		raise errors.FixedSizeError(4, m, (4, tuple(FOUR_STRANDS)))

	color = vars.var(f'{COLOR_PREFIX}{i}')
	position = {code.ks: index for index, code in enumerate(enumerate_codes(4, m))}
	entries = {}
	for source, image in FOUR_STRANDS[m][i].items():
		for target, raw in image:
			coefficient = parse(raw, UNCOLORED).substitute({COLOR_PREFIX: color}, vars)
			entries[position[target], position[source]] = coefficient
	return Matrix.from_entries(vars, len(position), entries)
