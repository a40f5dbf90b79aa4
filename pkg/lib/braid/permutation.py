from __future__ import annotations

# Native libraries
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

# Local libraries
from . import errors


# ---------------------> Permutations


@dataclass(frozen=True, order=True)
class Perm:
	"""Bijection of {1..n}; images[k-1] is the image of k."""

	images : tuple[int, ...]

	def __post_init__(self) -> None:
		if sorted(self.images) != list(range(1, len(self.images) + 1)):
			raise errors.InvalidPermutationError(self.images)

	@classmethod
	def identity(cls, n: int) -> Perm:
		return cls(tuple(range(1, n + 1)))

	@classmethod
	def transposition(cls, n: int, i: int) -> Perm:
		"""The transposition (i, i+1)."""

		if not 1 <= i < n:
			raise errors.IndexBoundsError(n, i)
		images = list(range(1, n + 1))
		images[i - 1], images[i] = i + 1, i
		return cls(tuple(images))

	@classmethod
	def all(cls, n: int) -> Iterator[Perm]:
		for images in permutations(range(1, n + 1)):
			yield cls(images)

	@property
	def n(self) -> int:
		return len(self.images)

	def __call__(self, k: int) -> int:
		return self.images[k - 1]

	def compose(self, other: Perm) -> Perm:
		"""self after other."""

		return Perm(tuple(self(other(k)) for k in range(1, self.n + 1)))

	def inverse(self) -> Perm:
		images = [0] * self.n
		for k, image in enumerate(self.images, start=1):
			images[image - 1] = k
		return Perm(tuple(images))

	def is_identity(self) -> bool:
		return self.images == tuple(range(1, self.n + 1))

	def cycles(self) -> list[tuple[int, ...]]:
		seen, cycles = set(), []
		for start in range(1, self.n + 1):
			if start in seen or self(start) == start:
				continue
			cycle, k = [], start
			while k not in seen:
				seen.add(k)
				cycle.append(k)
				k = self(k)
			cycles.append(tuple(cycle))
		return cycles

	def __str__(self) -> str:
		cycles = self.cycles()
		return ''.join('(' + ' '.join(map(str, cycle)) + ')' for cycle in cycles) if cycles else '()'
