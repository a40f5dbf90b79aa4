from __future__ import annotations

# Native libraries
from typing import Iterable

# Local libraries
from .complex import COLOR_PREFIX, LOOP_VARIABLE, colored_variables, fork_basis
from lib.braid import BraidWord, Convention, Perm
from lib.gassner import GradedMap, InducedRepresentation
from lib.gassner import errors as gassner_errors
from lib.ring import LaurentPoly, Matrix, VarSet

# Constants
UNCOLORED = VarSet.of(COLOR_PREFIX, LOOP_VARIABLE)


# ---------------------> Generator matrices


def _image(i: int, j: int, k: int, q: LaurentPoly, t: LaurentPoly) -> dict[tuple[int, int], LaurentPoly]:
	one = q.vars.one

	if i == j and i == k - 1:
		return {(j, k): t * q ** 2}
	if i == j - 1:
		return {(i, k): q, (i, j): q ** 2 - q, (j, k): 1 - q}
	if i == j:
		return {(j + 1, k): one}
	if i == k - 1:
		return {(j, i): q, (j, k): 1 - q, (i, k): (q ** 2 - q) * t}
	if i == k:
		return {(j, k + 1): one}
	return {(j, k): one}

def bkl_action_matrix(n: int, i: int, q: LaurentPoly, t: LaurentPoly) -> Matrix:
	"""σ_i on the forks v_(j,k); column (j,k) holds the image of v_(j,k)."""

	if not 1 <= i < n:
		raise gassner_errors.BlockBoundsError(n, i)

	basis = fork_basis(n)
	position = {pair: index for index, pair in enumerate(basis)}
	entries = {}
	for column, (j, k) in enumerate(basis):
		for pair, coefficient in _image(i, j, k, q, t).items():
			entries[position[pair], column] = coefficient
	return Matrix.from_entries(q.vars, len(basis), entries)

def bkl_matrix(n: int, i: int) -> Matrix:
	"""Uncoloured BKL_i(q, t)."""

	return bkl_action_matrix(n, i, UNCOLORED.var(COLOR_PREFIX), UNCOLORED.var(LOOP_VARIABLE))

def bkl(word: BraidWord) -> Matrix:
	n = word.n
	blocks, result = {}, Matrix.identity(UNCOLORED, len(fork_basis(n)))
	for index, sign in word.letters:
		if (index, sign) not in blocks:
			block = bkl_matrix(n, index)
			blocks[index, sign] = block if sign == 1 else block.inverse()
		result = result @ blocks[index, sign]
	return result


# ---------------------> Coloured BKL


class ColoredBKL(InducedRepresentation):
	"""σ_i coloured by the strand at slot i, carrying the variable q of that strand."""

	convention = Convention.LOWER
	family = 'bkl'

	def variables(self, n: int) -> VarSet:
		return colored_variables(n)

	def dimension(self, n: int) -> int:
		return len(fork_basis(n))

	def generator(self, n: int, i: int, color: int) -> Matrix:
		vars = self.variables(n)
		return bkl_action_matrix(n, i, vars.var(f'{COLOR_PREFIX}{color}'), vars.var(LOOP_VARIABLE))


CBKL = ColoredBKL()

def cbkl(word: BraidWord, convention: Convention | None = None) -> Matrix:
	return CBKL.colored(word, convention)

def cbkl_induced(word: BraidWord, sources: Iterable[Perm] | None = None) -> GradedMap:
	return CBKL.induced(word, sources)
