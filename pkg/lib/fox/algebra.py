from __future__ import annotations

# Native libraries
from dataclasses import dataclass
from typing import Any, Iterable, Mapping

# Local libraries
from . import errors


# ---------------------> Free group


@dataclass(frozen=True, order=True)
class FreeWord:
	"""Freely reduced word in x1, x2, ...; letters are (generator, ±1)."""

	letters : tuple[tuple[int, int], ...] = ()

	def __post_init__(self) -> None:
		stack = []
		for generator, exponent in self.letters:
			if exponent not in (1, -1):
				raise errors.ExponentError(exponent)
			if stack and stack[-1] == (generator, -exponent):
				stack.pop()
			else:
				stack.append((generator, exponent))
		object.__setattr__(self, 'letters', tuple(stack))

	@classmethod
	def generator(cls, j: int, exponent: int = 1) -> FreeWord:
		return cls(((j, exponent),))

	def __mul__(self, other: FreeWord) -> FreeWord:
		return FreeWord(self.letters + other.letters)

	def inverse(self) -> FreeWord:
		return FreeWord(tuple((generator, -exponent) for generator, exponent in reversed(self.letters)))

	def __len__(self) -> int:
		return len(self.letters)

	def exponent_sums(self, n: int) -> list[int]:
		sums = [0] * n
		for generator, exponent in self.letters:
			sums[generator - 1] += exponent
		return sums

	def __str__(self) -> str:
		if not self.letters:
			return '1'
		return ''.join(f'x{generator}' if exponent == 1 else f'x{generator}^-1' for generator, exponent in self.letters)


# ---------------------> Group ring


class GroupRingElement:
	"""Finite integer combination of free words."""

	__slots__ = ('terms',)

	def __init__(self, terms: Mapping[FreeWord, int] | None = None) -> None:
		self.terms : dict[FreeWord, int] = {word: coeff for word, coeff in sorted((terms or {}).items()) if coeff}

	@classmethod
	def of(cls, word: FreeWord, coeff: int = 1) -> GroupRingElement:
		return cls({word: coeff})

	@classmethod
	def one(cls) -> GroupRingElement:
		return cls({FreeWord(): 1})

	def _coerce(self, other: Any) -> GroupRingElement:
		if isinstance(other, GroupRingElement):
			return other
		if isinstance(other, FreeWord):
			return GroupRingElement.of(other)
		if isinstance(other, int):
			return GroupRingElement({FreeWord(): other})
		return NotImplemented

	def __add__(self, other: Any) -> GroupRingElement:
		other = self._coerce(other)
		if other is NotImplemented:
			return other
		terms = dict(self.terms)
		for word, coeff in other.terms.items():
			terms[word] = terms.get(word, 0) + coeff
		return GroupRingElement(terms)

	__radd__ = __add__

	def __neg__(self) -> GroupRingElement:
		return GroupRingElement({word: -coeff for word, coeff in self.terms.items()})

	def __sub__(self, other: Any) -> GroupRingElement:
		other = self._coerce(other)
		if other is NotImplemented:
			return other
		return self + (-other)

	def __rsub__(self, other: Any) -> GroupRingElement:
		return (-self) + other

	def __mul__(self, other: Any) -> GroupRingElement:
		other = self._coerce(other)
		if other is NotImplemented:
			return other
		terms = {}
		for left, a in self.terms.items():
			for right, b in other.terms.items():
				word = left * right
				terms[word] = terms.get(word, 0) + a * b
		return GroupRingElement(terms)

	def __rmul__(self, other: Any) -> GroupRingElement:
		other = self._coerce(other)
		if other is NotImplemented:
			return other
		return other * self

	def __eq__(self, other: object) -> bool:
		other = self._coerce(other)
		if other is NotImplemented:
			return other
		return self.terms == other.terms

	def __hash__(self) -> int:
		return hash(tuple(self.terms.items()))

	def is_zero(self) -> bool:
		return not self.terms

	def __str__(self) -> str:
		if not self.terms:
			return '0'
		return ' + '.join(f'{coeff}*{word}' if coeff != 1 else str(word) for word, coeff in self.terms.items())


# ---------------------> Functions


def word_sum(elements: Iterable[GroupRingElement]) -> GroupRingElement:
	terms = {}
	for element in elements:
		for word, coeff in element.terms.items():
			terms[word] = terms.get(word, 0) + coeff
	return GroupRingElement(terms)
