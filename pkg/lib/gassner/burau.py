from __future__ import annotations

# Local libraries
from . import errors
from .graded import GradedMap, InducedRepresentation
from lib.braid import BraidWord, Convention, Perm
from lib.ring import LaurentPoly, Matrix, VarSet, block_matrix

# Constants
VARIABLE_PREFIX = 't'


# ---------------------> Blocks


def burau_block(n: int, i: int, var: LaurentPoly) -> Matrix:
	"""Identity with [[1-t, 1], [t, 0]] in rows and columns i, i+1."""

	if not 1 <= i < n:
		raise errors.BlockBoundsError(n, i)
	return block_matrix(var.vars, n, i - 1, [[1 - var, 1], [var, 0]])

def reduced_burau_block(n: int, i: int, var: LaurentPoly) -> Matrix:
	# Row i-1 carries (t, -t, 1), clipped at both ends
	if not 1 <= i < n:
		raise errors.BlockBoundsError(n, i)

	size, row = n - 1, i - 1
	entries = {(k, k): var.vars.one for k in range(size) if k != row}
	entries[row, row] = -var
	if row > 0:
		entries[row, row - 1] = var
	if row < size - 1:
		entries[row, row + 1] = var.vars.one
	return Matrix.from_entries(var.vars, size, entries)

def burau(word: BraidWord, var: LaurentPoly, reduced: bool = False) -> Matrix:
	"""Uncoloured product in word order."""

	n = word.n
	make = reduced_burau_block if reduced else burau_block
	size = n - 1 if reduced else n
	blocks, result = {}, Matrix.identity(var.vars, size)
	for index, sign in word.letters:
		if (index, sign) not in blocks:
			block = make(n, index, var)
			blocks[index, sign] = block if sign == 1 else block.inverse()
		result = result @ blocks[index, sign]
	return result


# ---------------------> Gassner


class Gassner(InducedRepresentation):
	"""σ_i from τ acts by the Burau block in t_(τ^-1(i+1))."""

	convention = Convention.UPPER
	family = 'gassner'

	def variables(self, n: int) -> VarSet:
		return VarSet.indexed(VARIABLE_PREFIX, n)

	def dimension(self, n: int) -> int:
		return n

	def generator(self, n: int, i: int, color: int) -> Matrix:
		vars = self.variables(n)
		return burau_block(n, i, vars.var(f'{VARIABLE_PREFIX}{color}'))


GASSNER = Gassner()

def gamma(word: BraidWord, convention: Convention | None = None) -> Matrix:
	"""Coloured Burau product; multiplicative on pure braids only."""

	return GASSNER.colored(word, convention)

def induced_gassner(word: BraidWord, sources: list[Perm] | None = None) -> GradedMap:
	return GASSNER.induced(word, sources)
