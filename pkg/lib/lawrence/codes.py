from __future__ import annotations

# Native libraries
from dataclasses import dataclass
from math import comb

# Local libraries
from . import errors


# ---------------------> Code sequences


@dataclass(frozen=True, order=True)
class CodeSequenceIndex:
	"""(k1, ..., k_(n-1)): k_i configuration points on the arc between punctures i and i+1."""

	ks : tuple[int, ...]

	def __post_init__(self) -> None:
		if not self.ks or any(k < 0 for k in self.ks):
			raise errors.CodeSequenceError(self.ks, sum(self.ks))

	@property
	def m(self) -> int:
		return sum(self.ks)

	@property
	def n(self) -> int:
		return len(self.ks) + 1

	def padded(self, i: int) -> tuple[int, int, int]:
		"""(k_(i-1), k_i, k_(i+1)) with k_0 = k_n = 0."""

		ks = (0,) + self.ks + (0,)
		return ks[i - 1], ks[i], ks[i + 1]

	def moved(self, i: int, l1: int, l2: int) -> CodeSequenceIndex:
		# l1 points join from the left arc and l2 from the right one
		ks = list(self.ks)
		if i > 1:
			ks[i - 2] -= l1
		ks[i - 1] += l1 + l2
		if i < len(ks):
			ks[i] -= l2
		return CodeSequenceIndex(tuple(ks))

	def __str__(self) -> str:
		return f'U({",".join(map(str, self.ks))})'


def _compositions(total: int, parts: int) -> list[tuple[int, ...]]:
	if parts == 1:
		return [(total,)]
	return [(first,) + rest for first in range(total, -1, -1) for rest in _compositions(total - first, parts - 1)]

def enumerate_codes(n: int, m: int) -> list[CodeSequenceIndex]:
	"""E_(n,m) in reverse lexicographic order, e.g. (2,0), (1,1), (0,2)."""

	if n < 2 or m < 0:
		raise errors.LevelBoundsError(n, m)
	return [CodeSequenceIndex(ks) for ks in _compositions(m, n - 1)]

def dimension(n: int, m: int) -> int:
	if n < 2 or m < 0:
		raise errors.LevelBoundsError(n, m)
	return comb(n + m - 2, m)
