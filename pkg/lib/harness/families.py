"""Representation families reachable from the command line.

Every family has a plain form and optionally a colored and an induced form. Plain
means the uncolored matrix for burau, bkl and lawrence and the over-strand
colored matrix for gassner and fox, which have no uncolored counterpart besides
burau itself.
"""

from __future__ import annotations

# Native libraries
import re as regex
from dataclasses import dataclass
from typing import Callable, Literal

# Local libraries
from . import errors
from lib import bkl, fox, gassner, lawrence, quantum
from lib.braid import BraidWord
from lib.gassner import GradedMap
from lib.ring import Matrix, VarSet, collapse_variables, parse
from lib.utility.search import suggest

# Constants
DEFAULT_LEVEL = 2
BURAU_VARIABLES = VarSet.of('t')
NAME_FILTER = r'[A-Za-z_]\w*'

Mode = Literal['plain', 'colored', 'induced']
Result = Matrix | GradedMap


# ---------------------> Families


@dataclass(frozen=True)
class Family:
	name    : str
	plain   : Callable[[BraidWord, int], Result]
	colored : Callable[[BraidWord, int], Result] | None = None
	induced : Callable[[BraidWord, int], Result] | None = None

	def build(self, word: BraidWord, m: int = DEFAULT_LEVEL, mode: Mode = 'plain') -> Result:
		builder = getattr(self, mode, None)
		if builder is None:
			raise errors.UnsupportedModeError(self.name, mode)
		return builder(word, m)

FAMILIES = {family.name: family for family in (
	Family('burau', lambda word, m: gassner.burau(word, BURAU_VARIABLES.var('t'))),
	Family('gassner', lambda word, m: gassner.gamma(word), lambda word, m: gassner.gamma(word),
		   lambda word, m: gassner.induced_gassner(word)),
	Family('fox', lambda word, m: fox.gassner_matrix(word)),
	Family('quant', lambda word, m: quantum.quant(word), induced=lambda word, m: quantum.quant(word)),
	Family('bkl', lambda word, m: bkl.bkl(word), lambda word, m: bkl.cbkl(word),
		   lambda word, m: bkl.cbkl_induced(word)),
	Family('lawrence', lambda word, m: lawrence.lawrence(word, m), lambda word, m: lawrence.claw(word, m),
		   lambda word, m: lawrence.lawrence_induced(word, m)),
)}


# ---------------------> Functions


def family_names() -> list[str]:
	return list(FAMILIES)

def find_family(name: str) -> Family:
	if name in FAMILIES:
		return FAMILIES[name]

	raise errors.UnknownFamilyError(name, suggest(FAMILIES, name))

def represent(name: str, word: BraidWord, m: int = DEFAULT_LEVEL, mode: Mode = 'plain') -> Result:
	return find_family(name).build(word, m, mode)

def specialize(result: Result, raw: str) -> Result:
	"""Applies assignments like `t1=t,t2=t` or `t=t^-1`.

	Variables without an assignment keep their place, names that only occur in the
	images are appended in order of appearance. A bare name such as `t` sends
	t1, t2, ... to t.
	"""

	bare = raw.strip()
	if regex.fullmatch(NAME_FILTER, bare):
		images, target = collapse_variables(result.vars, bare, bare)
		if not images:
			raise errors.AssignmentError(raw)
		return result.substitute(images, target)

	assignments = {}
	for part in raw.split(','):
		key, found, expression = (piece.strip() for piece in part.partition('='))
		if not found or not regex.fullmatch(NAME_FILTER, key) or not expression:
			raise errors.AssignmentError(raw)
		result.vars.index(key)
		assignments[key] = expression

	names = [name for name in result.vars if name not in assignments]
	for expression in assignments.values():
		for name in regex.findall(NAME_FILTER, expression):
			if name not in names:
				names.append(name)

	target = VarSet(tuple(names))
	images = {key: parse(expression, target) for key, expression in assignments.items()}
	return result.substitute(images, target)
