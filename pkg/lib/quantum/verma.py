from __future__ import annotations

# Native libraries
from dataclasses import dataclass, field
from functools import reduce

# Local libraries
from . import errors
from lib.ring import LaurentPoly, Matrix, VarSet, q_binomial

# Constants
DEFAULT_CUTOFF = 2
GENERATORS = ('K', 'E', 'F')


# ---------------------> Truncated Verma modules


@dataclass(frozen=True)
class VermaTrunc:
	"""Verma module of colour s = q^α cut off after v_M."""

	cutoff : int = DEFAULT_CUTOFF
	vars   : VarSet = field(default_factory=lambda: VarSet.of('q', 's'))
	color  : str = 's'

	@property
	def q(self) -> LaurentPoly:
		return self.vars.var('q')

	@property
	def s(self) -> LaurentPoly:
		return self.vars.var(self.color)

	def _check(self, j: int) -> None:
		if not 0 <= j <= self.cutoff:
			raise errors.CutoffError(j, self.cutoff)

	def action(self, generator: str, j: int, power: int = 1) -> list[LaurentPoly]:
		"""Coefficients of generator.v_j on v0..v_M; `power` is the divided power for F."""

		self._check(j)
		vector = [self.vars.zero] * (self.cutoff + 1)
		q, s = self.q, self.s

		if generator == 'K':
			vector[j] = s * q ** (-2 * j)
		elif generator == 'E':
			if j > 0:
				vector[j - 1] = self.vars.one
		elif generator == 'F':
			if j + power > self.cutoff:
				raise errors.CutoffError(j + power, self.cutoff)
			product = reduce(
				lambda acc, k: acc * (s * q ** (-k - j) - s ** -1 * q ** (j + k)),
				range(power),
				self.vars.one
			)
			vector[j + power] = q_binomial(power + j, j, q) * product
		else:
			raise errors.UnknownGeneratorError(generator)
		return vector

	def matrix(self, generator: str, power: int = 1) -> Matrix:
		"""Action on the truncation, F columns that would leave it are dropped."""

		columns = []
		for j in range(self.cutoff + 1):
			if generator == 'F' and j + power > self.cutoff:
				columns.append([self.vars.zero] * (self.cutoff + 1))
			else:
				columns.append(self.action(generator, j, power))
		return Matrix.from_columns(self.vars, columns)


def verma_action(generator: str, j: int, cutoff: int = DEFAULT_CUTOFF, power: int = 1) -> list[LaurentPoly]:
	return VermaTrunc(cutoff).action(generator, j, power)
