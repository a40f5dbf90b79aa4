from __future__ import annotations

# Native libraries
import json
from dataclasses import dataclass, field
from functools import singledispatch
from typing import Any

# Local libraries
from . import errors
from lib.fox import GroupRingElement
from lib.gassner import GradedMap
from lib.ring import LaurentPoly, Matrix


# ---------------------> Residuals


@singledispatch
def residual_summary(residual: Any) -> tuple[int, int]:
	"""(nonzero entries, terms of the first nonzero entry); (0, 0) means the identity held."""

	raise errors.UnsupportedResultError(residual)

@residual_summary.register
def _(residual: bool) -> tuple[int, int]:
	return (0, 0) if residual else (1, 0)

@residual_summary.register
def _(residual: LaurentPoly) -> tuple[int, int]:
	return (1, len(residual.terms)) if residual else (0, 0)

@residual_summary.register
def _(residual: GroupRingElement) -> tuple[int, int]:
	return (1, len(residual.terms)) if not residual.is_zero() else (0, 0)

@residual_summary.register
def _(residual: Matrix) -> tuple[int, int]:
	entries = residual.nonzero_entries()
	return (len(entries), len(entries[0][2].terms)) if entries else (0, 0)

@residual_summary.register
def _(residual: GradedMap) -> tuple[int, int]:
	nonzero, terms = 0, 0
	for _, (_, matrix) in residual.blocks.items():
		count, first = residual_summary(matrix)
		if count and not nonzero:
			terms = first
		nonzero += count
	return nonzero, terms

@residual_summary.register
def _(residual: list) -> tuple[int, int]:
	nonzero, terms = 0, 0
	for item in residual:
		count, first = residual_summary(item)
		if count and not nonzero:
			terms = first
		nonzero += count
	return nonzero, terms


# ---------------------> Reports


@dataclass(frozen=True)
class CaseFailure:
	case    : str
	nonzero : int
	terms   : int

	def to_dict(self) -> dict[str, Any]:
		return {'case': self.case, 'nonzero': self.nonzero, 'terms': self.terms}

@dataclass
class VerificationReport:
	suite     : str
	seed      : int
	params    : dict[str, Any]
	cases     : int = 0
	failures  : list[CaseFailure] = field(default_factory=list)
	wall_time : float = 0.0

	@property
	def passed(self) -> bool:
		return not self.failures

	def to_dict(self, timing: bool = True) -> dict[str, Any]:
		data = {
			'suite': self.suite,
			'seed': self.seed,
			'params': dict(sorted(self.params.items())),
			'cases': self.cases,
			'failures': [failure.to_dict() for failure in sorted(self.failures, key=lambda failure: failure.case)]
		}
		if timing:
			data['wall_time'] = round(self.wall_time, 3)
		return data

	def to_json(self, timing: bool = True) -> str:
		return json.dumps(self.to_dict(timing), indent=2)
