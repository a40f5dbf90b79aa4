from __future__ import annotations

# Native libraries
import logging
from os.path import basename
from typing import Iterable

# Local libraries
from . import errors
from lib.braid import BraidWord, Perm
from lib.gassner import GradedMap, InducedRepresentation, compose, induced_gassner
from lib.gassner import errors as gassner_errors
from lib.ring import Matrix, VarSet

# Constants
VARIABLE_PREFIX = 's'
PINNED_SIGN = 1

name = basename(__file__)[:-3]
log = logging.getLogger(name)


# ---------------------> Action on the weight one subspace


class Quant(InducedRepresentation):
	"""σ_k on τ⊗f_i; both strands of the crossing colour the block, so `block` is overridden."""

	family = 'quant'

	def __init__(self, sign: int = PINNED_SIGN) -> None:
		if sign not in (1, -1):
			raise errors.SignChoiceError(sign)
		self.sign : int = sign

	def variables(self, n: int) -> VarSet:
		return VarSet.indexed(VARIABLE_PREFIX, n)

	def dimension(self, n: int) -> int:
		return n

	def block(self, n: int, i: int, source: Perm) -> Matrix:
		if not 1 <= i < n:
			raise gassner_errors.BlockBoundsError(n, i)

		vars = self.variables(n)
		back = source.inverse()
		a = vars.var(f'{VARIABLE_PREFIX}{back(i)}')
		b = vars.var(f'{VARIABLE_PREFIX}{back(i + 1)}')

		entries = {(k, k): vars.one for k in range(n) if k not in (i - 1, i)}
		entries[i - 1, i - 1] = 1 - a ** 2
		entries[i, i - 1] = b * self.sign
		entries[i - 1, i] = a * self.sign
		return Matrix.from_entries(vars, n, entries)


QUANT = {sign: Quant(sign) for sign in (1, -1)}

def quant(word: BraidWord, sign: int = PINNED_SIGN, sources: Iterable[Perm] | None = None) -> GradedMap:
	if sign not in QUANT:
		raise errors.SignChoiceError(sign)
	return QUANT[sign].induced(word, sources)


# ---------------------> Comparison with Gassner


def phi(n: int, sources: Iterable[Perm] | None = None) -> GradedMap:
	"""Diagonal τ⊗f_i -> (1 - s_(τ^-1(i))^2) / Π_(j>=i) s_(τ^-1(j)) τ⊗g_i."""

	vars = VarSet.indexed(VARIABLE_PREFIX, n)
	sources = Perm.all(n) if sources is None else sources

	blocks = {}
	for source in sources:
		back = source.inverse()
		strand = [vars.var(f'{VARIABLE_PREFIX}{back(i)}') for i in range(1, n + 1)]
		entries, denominator = {}, vars.one
		for i in range(n, 0, -1):
			denominator = denominator * strand[i - 1]
			entries[i - 1, i - 1] = (1 - strand[i - 1] ** 2) * denominator.inverse()
		blocks[source] = (source, Matrix.from_entries(vars, n, entries))
	return GradedMap(n, vars, n, blocks)

def gassner_in_colors(word: BraidWord, sources: Iterable[Perm] | None = None) -> GradedMap:
	"""Induced Gassner with t_i = s_i^2."""

	n = word.n
	target = VarSet.indexed(VARIABLE_PREFIX, n)
	images = {f't{i}': target.var(f'{VARIABLE_PREFIX}{i}') ** 2 for i in range(1, n + 1)}
	return induced_gassner(word, sources).substitute(images, target)

def check_conjugation(word: BraidWord, sign: int = PINNED_SIGN) -> GradedMap:
	"""Gassner∘Φ - Φ∘Quant, blockwise; zero when the two actions are conjugate on this word."""

	n = word.n
	conjugator = phi(n)
	residual = compose(gassner_in_colors(word), conjugator) - compose(conjugator, quant(word, sign))
	if not residual.is_zero():
		log.debug(f'Conjugation fails on `{word}` with sign {sign}')
	return residual
