from __future__ import annotations

# Native libraries
import re as regex
from dataclasses import dataclass
from operator import add
from typing import Any, Iterable, Iterator, Mapping

# Local libraries
from . import errors

# Constants
TOKEN_FILTER = r'\s*(\d+|[A-Za-z_]\w*|\^|\*|\+|-|\{|\}|\(|\))'


# ---------------------> Variable sets


@dataclass(frozen=True)
class VarSet:
	names : tuple[str, ...]

	def __post_init__(self) -> None:
		if len(set(self.names)) != len(self.names):
			raise errors.DuplicateVariableError(self.names)

	@classmethod
	def of(cls, *names: str) -> VarSet:
		return cls(tuple(names))

	@classmethod
	def indexed(cls, prefix: str, n: int, *extra: str) -> VarSet:
		"""Variables prefix1..prefixn followed by any extra names, e.g. q1,q2,q3,t."""

		return cls(tuple(f'{prefix}{i}' for i in range(1, n + 1)) + tuple(extra))

	def __len__(self) -> int:
		return len(self.names)

	def __iter__(self) -> Iterator[str]:
		return iter(self.names)

	def __contains__(self, name: object) -> bool:
		return name in self.names

	def index(self, name: str) -> int:
		try:
			return self.names.index(name)
		except ValueError:
			raise errors.UnknownVariableError(name) from None

	def var(self, name: str) -> LaurentPoly:
		exps = [0] * len(self.names)
		exps[self.index(name)] = 1
		return LaurentPoly(self, {tuple(exps): 1})

	def const(self, value: int) -> LaurentPoly:
		return LaurentPoly(self, {(0,) * len(self.names): value})

	def monomial(self, powers: Mapping[str, int], coeff: int = 1) -> LaurentPoly:
		exps = [0] * len(self.names)
		for name, power in powers.items():
			exps[self.index(name)] += power
		return LaurentPoly(self, {tuple(exps): coeff})

	@property
	def zero(self) -> LaurentPoly:
		return LaurentPoly(self, {})

	@property
	def one(self) -> LaurentPoly:
		return self.const(1)


# ---------------------> Laurent polynomials


class LaurentPoly:
	"""Element of Z[x1^±1, ..., xk^±1] over a fixed VarSet.

	Terms live in a dict from exponent tuples to nonzero coefficients; the sorted view
	`terms` is built on first use only, since products of long words create many
	intermediate entries that are never printed or compared term by term.
	"""

	__slots__ = ('vars', 'data', '_terms', '_hash')

	def __init__(self, vars: VarSet, mapping: Mapping[tuple[int, ...], int]) -> None:
		self.vars   : VarSet = vars
		self.data   : dict[tuple[int, ...], int] = {exps: coeff for exps, coeff in mapping.items() if coeff}
		self._terms : tuple[tuple[tuple[int, ...], int], ...] | None = None
		self._hash  : int | None = None

	@classmethod
	def _trusted(cls, vars: VarSet, data: dict[tuple[int, ...], int]) -> LaurentPoly:
		# data must already be free of zero coefficients
		poly = cls.__new__(cls)
		poly.vars, poly.data, poly._terms, poly._hash = vars, data, None, None
		return poly

	@property
	def terms(self) -> tuple[tuple[tuple[int, ...], int], ...]:
		if self._terms is None:
			self._terms = tuple(sorted(self.data.items()))
		return self._terms

	# Coercion

	def _coerce(self, other: Any) -> LaurentPoly:
		if isinstance(other, LaurentPoly):
			if other.vars != self.vars:
				raise errors.VarSetMismatchError(self.vars.names, other.vars.names)
			return other
		if isinstance(other, int):
			return self.vars.const(other)
		return NotImplemented

	# Arithmetic

	def __add__(self, other: Any) -> LaurentPoly:
		other = self._coerce(other)
		if other is NotImplemented:
			return other
		if not other.data:
			return self
		if not self.data:
			return other

		result = dict(self.data)
		accumulate(result, other.data)
		return LaurentPoly._trusted(self.vars, result)

	__radd__ = __add__

	def __neg__(self) -> LaurentPoly:
		return LaurentPoly._trusted(self.vars, {exps: -coeff for exps, coeff in self.data.items()})

	def __sub__(self, other: Any) -> LaurentPoly:
		other = self._coerce(other)
		if other is NotImplemented:
			return other
		return self + (-other)

	def __rsub__(self, other: Any) -> LaurentPoly:
		other = self._coerce(other)
		if other is NotImplemented:
			return other
		return other + (-self)

	def __mul__(self, other: Any) -> LaurentPoly:
		other = self._coerce(other)
		if other is NotImplemented:
			return other
		if not self.data or not other.data:
			return self.vars.zero
		large, small = (self, other) if len(self.data) >= len(other.data) else (other, self)

		if len(small.data) == 1:
			(shift, factor), = small.data.items()
			if not any(shift):
				if factor == 1:
					return large
				return LaurentPoly._trusted(self.vars, {exps: coeff * factor for exps, coeff in large.data.items()})
			return LaurentPoly._trusted(self.vars, {
				tuple(map(add, exps, shift)): coeff * factor for exps, coeff in large.data.items()
			})

		product = {}
		for right, b in small.data.items():
			for left, a in large.data.items():
				exps = tuple(map(add, left, right))
				product[exps] = product.get(exps, 0) + a * b
		return LaurentPoly(self.vars, product)

	__rmul__ = __mul__

	def __pow__(self, power: int) -> LaurentPoly:
		if power < 0:
			return self.inverse() ** -power

		result, base = self.vars.one, self
		while power:
			if power & 1:
				result = result * base
			base = base * base
			power >>= 1
		return result

	def inverse(self) -> LaurentPoly:
		"""Inverse of a unit, i.e. of a single term with coefficient ±1."""

		if not self.is_unit():
			raise errors.NotAUnitError(str(self))
		(exps, coeff), = self.data.items()
		return LaurentPoly._trusted(self.vars, {tuple(-e for e in exps): coeff})

	# Predicates

	def __bool__(self) -> bool:
		return bool(self.data)

	def is_zero(self) -> bool:
		return not self.data

	def is_monomial(self) -> bool:
		return len(self.data) == 1

	def is_unit(self) -> bool:
		return len(self.data) == 1 and abs(next(iter(self.data.values()))) == 1

	def is_constant(self) -> bool:
		return not self.data or (len(self.data) == 1 and not any(next(iter(self.data))))

	def has_negative_exponent(self, name: str) -> bool:
		index = self.vars.index(name)
		return any(exps[index] < 0 for exps in self.data)

	def occurs(self, name: str) -> bool:
		index = self.vars.index(name)
		return any(exps[index] for exps in self.data)

	# Comparison

	def __eq__(self, other: object) -> bool:
		if isinstance(other, int):
			return self.data == self.vars.const(other).data
		if isinstance(other, LaurentPoly):
			return self.vars == other.vars and self.data == other.data
		return NotImplemented

	def __hash__(self) -> int:
		if self._hash is None:
			self._hash = hash((self.vars, self.terms))
		return self._hash

	# Structure

	def coefficient(self, powers: Mapping[str, int]) -> int:
		exps = [0] * len(self.vars)
		for name, power in powers.items():
			exps[self.vars.index(name)] = power
		return self.data.get(tuple(exps), 0)

	def substitute(self, images: Mapping[str, LaurentPoly | int], target: VarSet | None = None) -> LaurentPoly:
		"""Image under the ring map sending each named variable to its image.

		Variables without an image keep their name and must exist in the target.
		A variable occurring with a negative exponent needs a unit image.
		"""

		target = target or self.vars
		columns = []
		for name in self.vars.names:
			image = images.get(name)
			if not self.occurs(name):
				columns.append((None, {}))
				continue
			if image is None:
				image = target.var(name)
			elif isinstance(image, int):
				image = target.const(image)
			elif image.vars != target:
				raise errors.VarSetMismatchError(image.vars.names, target.names)

			if self.has_negative_exponent(name) and not image.is_unit():
				raise errors.NonInvertibleImageError(name, str(image))
			columns.append((image, {}))

		result = {}
		for exps, coeff in self.data.items():
			term = target.const(coeff)
			for (image, powers), power in zip(columns, exps):
				if not power:
					continue
				if power not in powers:
					powers[power] = image ** power
				term = term * powers[power]
			accumulate(result, term.data)
		return LaurentPoly(target, result)

	# Output

	def __str__(self) -> str:
		if not self.terms:
			return '0'

		output = ''
		for exps, coeff in self.terms:
			factors = [name if power == 1 else f'{name}^{power}' for name, power in zip(self.vars.names, exps) if power]
			sign = '-' if coeff < 0 else '+'
			magnitude = abs(coeff)
			if not factors:
				body = str(magnitude)
			elif magnitude == 1:
				body = '*'.join(factors)
			else:
				body = f'{magnitude}*' + '*'.join(factors)

			if not output:
				output = body if sign == '+' else f'-{body}'
			else:
				output += f' {sign} {body}'
		return output

	def __repr__(self) -> str:
		return f'LaurentPoly({self})'

	def to_latex(self) -> str:
		if not self.terms:
			return '0'

		output = ''
		for exps, coeff in self.terms:
			factors = ''.join(name if power == 1 else f'{name}^{{{power}}}' for name, power in zip(self.vars.names, exps) if power)
			magnitude = abs(coeff)
			body = factors if factors and magnitude == 1 else f'{magnitude}{factors}'
			if not output:
				output = body if coeff > 0 else f'-{body}'
			else:
				output += f'{"-" if coeff < 0 else "+"}{body}'
		return output

	def to_json(self) -> dict:
		return {
			'vars': list(self.vars.names),
			'terms': [{'coeff': str(coeff), 'exps': list(exps)} for exps, coeff in self.terms]
		}

	@classmethod
	def from_json(cls, data: dict) -> LaurentPoly:
		vars = VarSet(tuple(data['vars']))
		return cls(vars, {tuple(term['exps']): int(term['coeff']) for term in data['terms']})


# ---------------------> Functions


def accumulate(result: dict[tuple[int, ...], int], data: Mapping[tuple[int, ...], int]) -> None:
	"""Adds the terms of data into result in place, dropping cancelled terms."""

	for exps, coeff in data.items():
		value = result.get(exps, 0) + coeff
		if value:
			result[exps] = value
		else:
			del result[exps]

def total(polys: Iterable[LaurentPoly], vars: VarSet) -> LaurentPoly:
	"""Sum that accumulates terms in one pass; a single summand is returned as is."""

	nonzero = [poly for poly in polys if poly]
	if not nonzero:
		return vars.zero
	if len(nonzero) == 1 and nonzero[0].vars == vars:
		return nonzero[0]

	result = {}
	for poly in nonzero:
		accumulate(result, poly.data)
	return LaurentPoly._trusted(vars, result)

def parse(raw: str, vars: VarSet) -> LaurentPoly:
	"""Reads sums of products of integers, variables and powers like `2*s^2*t^-1 - 1`."""

	tokens = regex.findall(TOKEN_FILTER, raw)
	if ''.join(tokens) != regex.sub(r'\s', '', raw) or not tokens:
		raise errors.ParseError(raw)

	def read_exponent() -> int:
		sign = 1
		braced = tokens and tokens[0] == '{'
		if braced:
			tokens.pop(0)
		if tokens and tokens[0] == '-':
			tokens.pop(0)
			sign = -1
		if not tokens or not tokens[0].isdigit():
			raise errors.ParseError(raw)
		power = sign * int(tokens.pop(0))
		if braced:
			if not tokens or tokens.pop(0) != '}':
				raise errors.ParseError(raw)
		return power

	def read_factor() -> LaurentPoly:
		if not tokens:
			raise errors.ParseError(raw)
		token = tokens.pop(0)
		if token == '(':
			factor = read_sum()
			if not tokens or tokens.pop(0) != ')':
				raise errors.ParseError(raw)
		elif token.isdigit():
			factor = vars.const(int(token))
		elif regex.fullmatch(r'[A-Za-z_]\w*', token):
			factor = vars.var(token)
		else:
			raise errors.ParseError(raw)

		if tokens and tokens[0] == '^':
			tokens.pop(0)
			factor = factor ** read_exponent()
		return factor

	def read_product() -> LaurentPoly:
		product = read_factor()
		while tokens and tokens[0] == '*':
			tokens.pop(0)
			product = product * read_factor()
		return product

	def read_sum() -> LaurentPoly:
		sign = 1
		if tokens and tokens[0] in '+-':
			sign = -1 if tokens.pop(0) == '-' else 1
		result = sign * read_product()
		while tokens and tokens[0] in ('+', '-'):
			sign = -1 if tokens.pop(0) == '-' else 1
			result = result + sign * read_product()
		return result

	result = read_sum()
	if tokens:
		raise errors.ParseError(raw)
	return result
