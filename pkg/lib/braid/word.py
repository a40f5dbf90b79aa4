from __future__ import annotations

# Native libraries
import random
from dataclasses import dataclass
from enum import Enum

# Local libraries
from . import errors
from .permutation import Perm

# Constants
MIN_PURE_FACTORS = 3
MAX_PURE_FACTORS = 8


# ---------------------> Dataclasses


class Convention(Enum):
	"""Which strand a crossing is coloured by.

	LOWER: a positive σ_i carries the strand entering at slot i, a negative one the strand at slot i+1.
	UPPER: the other way round.
	"""

	LOWER = 'lower'
	UPPER = 'upper'

@dataclass(frozen=True)
class CrossingLabel:
	position    : int
	index       : int
	sign        : int
	over_strand : int
	strands     : tuple[int, int]

@dataclass(frozen=True)
class BraidWord:
	n       : int
	letters : tuple[tuple[int, int], ...] = ()

	def __post_init__(self) -> None:
		if self.n < 1:
			raise errors.StrandCountError(self.n)
		for index, sign in self.letters:
			if not 1 <= index < self.n:
				raise errors.IndexBoundsError(self.n, index)
			if sign not in (1, -1):
				raise errors.WordSyntaxError(f'{index}^{sign}')

	@classmethod
	def parse(cls, raw: str, n: int) -> BraidWord:
		"""Reads whitespace-separated signed integers, `1 2 -1` is σ1 σ2 σ1^-1."""

		letters = []
		for token in raw.replace(',', ' ').split():
			try:
				value = int(token)
			except ValueError:
				raise errors.WordSyntaxError(raw) from None
			if not value:
				raise errors.WordSyntaxError(raw)
			letters.append((abs(value), 1 if value > 0 else -1))
		return cls(n, tuple(letters))

	@classmethod
	def generator(cls, n: int, i: int, sign: int = 1) -> BraidWord:
		return cls(n, ((i, sign),))

	def __len__(self) -> int:
		return len(self.letters)

	def __mul__(self, other: BraidWord) -> BraidWord:
		if other.n != self.n:
			raise errors.StrandMismatchError(self.n, other.n)
		return BraidWord(self.n, self.letters + other.letters)

	def __pow__(self, power: int) -> BraidWord:
		base = self if power >= 0 else self.inverse()
		return BraidWord(self.n, base.letters * abs(power))

	def inverse(self) -> BraidWord:
		return BraidWord(self.n, tuple((index, -sign) for index, sign in reversed(self.letters)))

	def __str__(self) -> str:
		return ' '.join(str(index * sign) for index, sign in self.letters)


# ---------------------> Functions


def perm_of(word: BraidWord) -> Perm:
	"""s_(i1) o s_(i2) o ... o s_(ir) for the word σ_(i1)...σ_(ir), signs ignored."""

	result = Perm.identity(word.n)
	for index, _ in word.letters:
		result = result.compose(Perm.transposition(word.n, index))
	return result

def is_pure(word: BraidWord) -> bool:
	return perm_of(word).is_identity()

def pure_generator(n: int, r: int, s: int) -> BraidWord:
	"""A(r,s) = σ_(s-1) ... σ_(r+1) σ_r^2 σ_(r+1)^-1 ... σ_(s-1)^-1."""

	if not 1 <= r < s <= n:
		raise errors.PureGeneratorBoundsError(n, r, s)

	conjugator = tuple((index, 1) for index in range(s - 1, r, -1))
	inverse = tuple((index, -1) for index in range(r + 1, s))
	return BraidWord(n, conjugator + ((r, 1), (r, 1)) + inverse)

def over_strand_labels(word: BraidWord, convention: Convention = Convention.LOWER) -> list[CrossingLabel]:
	"""Colours every crossing by one of its two strands, reading the word right to left."""

	slots = list(range(1, word.n + 1))
	labels = []
	for position in range(len(word.letters) - 1, -1, -1):
		index, sign = word.letters[position]
		lower, upper = slots[index - 1], slots[index]
		takes_lower = (sign == 1) == (convention is Convention.LOWER)
		labels.append(CrossingLabel(position, index, sign, lower if takes_lower else upper, (lower, upper)))
		slots[index - 1], slots[index] = upper, lower

	labels.reverse()
	return labels

def forget_last_strand(word: BraidWord) -> BraidWord:
	"""Deletes every crossing of strand n from a pure braid and re-indexes the rest."""

	if not is_pure(word):
		raise errors.NotPureError(str(word))

	n = word.n
	slots = list(range(1, n + 1))
	kept = []
	for position in range(len(word.letters) - 1, -1, -1):
		index, sign = word.letters[position]
		last = slots.index(n) + 1
		if last not in (index, index + 1):
			kept.append((index - 1 if last < index else index, sign))
		slots[index - 1], slots[index] = slots[index], slots[index - 1]

	kept.reverse()
	return BraidWord(n - 1, tuple(kept))

def free_reduce(word: BraidWord) -> BraidWord:
	stack = []
	for index, sign in word.letters:
		if stack and stack[-1] == (index, -sign):
			stack.pop()
		else:
			stack.append((index, sign))
	return BraidWord(word.n, tuple(stack))

def random_word(n: int, length: int, rng: random.Random) -> BraidWord:
	return BraidWord(n, tuple((rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)))

def random_pure_word(n: int, rng: random.Random, low: int = MIN_PURE_FACTORS, high: int = MAX_PURE_FACTORS) -> BraidWord:
	"""Product of random A(r,s)^±1, pure by construction."""

	word = BraidWord(n)
	for _ in range(rng.randint(low, high)):
		r = rng.randint(1, n - 1)
		s = rng.randint(r + 1, n)
		word = word * pure_generator(n, r, s) ** rng.choice((1, -1))
	return word
