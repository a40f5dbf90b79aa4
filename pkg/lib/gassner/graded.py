from __future__ import annotations

# Native libraries
import logging
from functools import lru_cache
from os.path import basename
from typing import Callable, Iterable, Mapping

# Local libraries
from . import errors
from lib.braid import BraidWord, Convention, Perm, over_strand_labels
from lib.ring import LaurentPoly, Matrix, VarSet

# Constants
CACHE_SIZE = 1024

name = basename(__file__)[:-3]
log = logging.getLogger(name)


# ---------------------> Graded maps


class GradedMap:
	"""Linear map on ⊕_τ V^τ, given per source permutation as (target permutation, block)."""

	__slots__ = ('n', 'vars', 'dimension', 'blocks')

	def __init__(self, n: int, vars: VarSet, dimension: int, blocks: Mapping[Perm, tuple[Perm, Matrix]]) -> None:
		self.n         : int = n
		self.vars      : VarSet = vars
		self.dimension : int = dimension
		self.blocks    : dict[Perm, tuple[Perm, Matrix]] = dict(sorted(blocks.items()))

		for source, (target, matrix) in self.blocks.items():
			if source.n != n or target.n != n:
				raise errors.GradingMismatchError(source)
			if matrix.shape != (dimension, dimension):
				raise errors.DimensionMismatchError(dimension, matrix.shape)

	@classmethod
	def identity(cls, n: int, vars: VarSet, dimension: int, sources: Iterable[Perm] | None = None) -> GradedMap:
		sources = Perm.all(n) if sources is None else sources
		block = Matrix.identity(vars, dimension)
		return cls(n, vars, dimension, {source: (source, block) for source in sources})

	def __getitem__(self, source: Perm) -> tuple[Perm, Matrix]:
		try:
			return self.blocks[source]
		except KeyError:
			raise errors.GradingMismatchError(source) from None

	def target(self, source: Perm) -> Perm:
		return self[source][0]

	def matrix(self, source: Perm) -> Matrix:
		return self[source][1]

	def __matmul__(self, other: GradedMap) -> GradedMap:
		return compose(self, other)

	def map(self, func: Callable[[Matrix], Matrix], vars: VarSet | None = None) -> GradedMap:
		vars = vars or self.vars
		return GradedMap(self.n, vars, self.dimension, {
			source: (target, func(matrix)) for source, (target, matrix) in self.blocks.items()
		})

	def substitute(self, images: Mapping[str, LaurentPoly | int], target: VarSet | None = None) -> GradedMap:
		return self.map(lambda matrix: matrix.substitute(images, target), target)

	def __sub__(self, other: GradedMap) -> GradedMap:
		"""Blockwise difference of two maps with the same grading."""

		blocks = {}
		for source, (target, matrix) in self.blocks.items():
			other_target, other_matrix = other[source]
			if other_target != target:
				raise errors.GradingMismatchError(source)
			blocks[source] = (target, matrix - other_matrix)
		return GradedMap(self.n, self.vars, self.dimension, blocks)

	def is_zero(self) -> bool:
		return all(matrix.is_zero() for _, matrix in self.blocks.values())

	def is_identity(self) -> bool:
		identity = Matrix.identity(self.vars, self.dimension)
		return all(source == target and matrix == identity for source, (target, matrix) in self.blocks.items())

	def fixes(self, source: Perm) -> bool:
		return self.target(source) == source

	def __eq__(self, other: object) -> bool:
		if not isinstance(other, GradedMap):
			return NotImplemented
		return (self.n, self.vars, self.dimension, self.blocks) == (other.n, other.vars, other.dimension, other.blocks)

	def __repr__(self) -> str:
		return f'GradedMap(n={self.n}, {len(self.blocks)} blocks of size {self.dimension})'


def compose(left: GradedMap, right: GradedMap) -> GradedMap:
	"""left after right: each source goes through right, then through left at right's target."""

	if left.n != right.n or left.vars != right.vars or left.dimension != right.dimension:
		raise errors.DimensionMismatchError(left.dimension, (right.dimension, right.dimension))

	blocks = {}
	for source, (middle, inner) in right.blocks.items():
		target, outer = left[middle]
		blocks[source] = (target, outer @ inner)
	return GradedMap(left.n, left.vars, left.dimension, blocks)


# ---------------------> Representations


class InducedRepresentation:
	"""Family of generator blocks coloured by strands, read off as a GradedMap or as a coloured product.

	Subclasses provide `variables`, `dimension` and `generator`; `block` picks the colour of
	the crossing from the source permutation according to the convention. Blocks and their
	inverses are memoised in bounded caches keyed by instance.
	"""

	convention : Convention = Convention.LOWER
	family     : str = 'induced'

	def variables(self, n: int) -> VarSet:
		raise NotImplementedError

	def dimension(self, n: int) -> int:
		raise NotImplementedError

	def generator(self, n: int, i: int, color: int) -> Matrix:
		"""Block of σ_i whose crossing is coloured by strand `color`."""

		raise NotImplementedError

	def color(self, i: int, source: Perm) -> int:
		# Strand sitting at slot p is source^-1(p)
		slot = i if self.convention is Convention.LOWER else i + 1
		return source.inverse()(slot)

	def block(self, n: int, i: int, source: Perm) -> Matrix:
		return self.generator(n, i, self.color(i, source))

	@lru_cache(maxsize=CACHE_SIZE)
	def letter(self, n: int, i: int, sign: int, source: Perm) -> tuple[Perm, Matrix]:
		"""Target and block of σ_i^sign leaving the source permutation."""

		target = Perm.transposition(n, i).compose(source)
		if sign == 1:
			return target, self.block(n, i, source)

		log.debug(f'Inverting the {self.family} block of σ{i} at {target}')
		return target, self.block(n, i, target).inverse()

	@lru_cache(maxsize=CACHE_SIZE)
	def colored_letter(self, n: int, i: int, sign: int, color: int) -> Matrix:
		block = self.generator(n, i, color)
		return block if sign == 1 else block.inverse()

	def induced(self, word: BraidWord, sources: Iterable[Perm] | None = None) -> GradedMap:
		n = word.n
		vars, dimension = self.variables(n), self.dimension(n)
		sources = Perm.all(n) if sources is None else sources

		blocks = {}
		for source in sources:
			current, matrix = source, Matrix.identity(vars, dimension)
			for index, sign in reversed(word.letters):
				current, block = self.letter(n, index, sign, current)
				matrix = block @ matrix
			blocks[source] = (current, matrix)
		return GradedMap(n, vars, dimension, blocks)

	def colored(self, word: BraidWord, convention: Convention | None = None, start: Matrix | None = None) -> Matrix:
		"""Product of generator blocks in word order, each coloured by its over-strand label.

		With `start` the blocks are multiplied onto that matrix instead of the identity, so
		colored(v, start=colored(u)) equals colored(u) @ colored(v) without forming the
		dense product.
		"""

		n = word.n
		convention = convention or self.convention
		result = Matrix.identity(self.variables(n), self.dimension(n)) if start is None else start
		for label in over_strand_labels(word, convention):
			result = result @ self.colored_letter(n, label.index, label.sign, label.over_strand)
		return result
