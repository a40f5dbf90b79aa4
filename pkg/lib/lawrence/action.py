from __future__ import annotations

# Native libraries
from functools import lru_cache
from typing import Iterable

# Local libraries
from .codes import enumerate_codes
from lib.braid import BraidWord, Convention, Perm
from lib.gassner import GradedMap, InducedRepresentation
from lib.gassner import errors as gassner_errors
from lib.ring import LaurentPoly, Matrix, VarSet, t_trinomial

# Constants
COLOR_PREFIX = 's'
LOOP_VARIABLE = 't'
UNCOLORED = VarSet.of(COLOR_PREFIX, LOOP_VARIABLE)


# ---------------------> Generator matrices


def colored_variables(n: int) -> VarSet:
	return VarSet.indexed(COLOR_PREFIX, n, LOOP_VARIABLE)

def lawrence_action_matrix(n: int, m: int, i: int, s: LaurentPoly, t: LaurentPoly) -> Matrix:
	"""σ_i on code sequences; column U(ks) holds its image.

	σ_i U(ks) = (-1)^k t^(-k(k-1)/2) Σ s^(k+l2) (k+l1+l2; k, l1, l2)_(1/t) U(.., k_(i-1)-l1, k+l1+l2, k_(i+1)-l2, ..)
	with k = k_i, l1 <= k_(i-1), l2 <= k_(i+1) and k_0 = k_n = 0.
	"""

	if not 1 <= i < n:
		raise gassner_errors.BlockBoundsError(n, i)

	codes = enumerate_codes(n, m)
	position = {code: index for index, code in enumerate(codes)}
	inverse_t = t ** -1

	entries = {}
	for column, code in enumerate(codes):
		left, k, right = code.padded(i)
		prefactor = (-1) ** k * t ** -(k * (k - 1) // 2)
		for l1 in range(left + 1):
			for l2 in range(right + 1):
				coefficient = prefactor * s ** (k + l2) * t_trinomial(k + l1 + l2, k, l1, l2, inverse_t)
				row = position[code.moved(i, l1, l2)]
				entries[row, column] = entries.get((row, column), s.vars.zero) + coefficient
	return Matrix.from_entries(s.vars, len(codes), entries)

def lawrence_matrix(n: int, m: int, i: int) -> Matrix:
	"""Uncoloured L_i(s, t)."""

	return lawrence_action_matrix(n, m, i, UNCOLORED.var(COLOR_PREFIX), UNCOLORED.var(LOOP_VARIABLE))

def lawrence(word: BraidWord, m: int) -> Matrix:
	n = word.n
	blocks, result = {}, Matrix.identity(UNCOLORED, len(enumerate_codes(n, m)))
	for index, sign in word.letters:
		if (index, sign) not in blocks:
			block = lawrence_matrix(n, m, index)
			blocks[index, sign] = block if sign == 1 else block.inverse()
		result = result @ blocks[index, sign]
	return result


# ---------------------> Coloured Lawrence


class ColoredLawrence(InducedRepresentation):
	"""Level m action, σ_i coloured by the strand at slot i."""

	convention = Convention.LOWER
	family = 'lawrence'

	def __init__(self, m: int) -> None:
		self.m : int = m

	def variables(self, n: int) -> VarSet:
		return colored_variables(n)

	def dimension(self, n: int) -> int:
		return len(enumerate_codes(n, self.m))

	def generator(self, n: int, i: int, color: int) -> Matrix:
		vars = self.variables(n)
		return lawrence_action_matrix(n, self.m, i, vars.var(f'{COLOR_PREFIX}{color}'), vars.var(LOOP_VARIABLE))


@lru_cache(maxsize=8)
def colored_lawrence(m: int) -> ColoredLawrence:
	return ColoredLawrence(m)

def claw(word: BraidWord, m: int, convention: Convention | None = None) -> Matrix:
	return colored_lawrence(m).colored(word, convention)

def lawrence_induced(word: BraidWord, m: int, sources: Iterable[Perm] | None = None) -> GradedMap:
	return colored_lawrence(m).induced(word, sources)
