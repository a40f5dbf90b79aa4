"""Quantum integers in the symmetric [i]_q and the one-sided (i)_t normalisations.

Everything is built from sums and products so the results stay exact; no
polynomial is ever divided. The `var` argument may be any unit, which is how
binomials in t^-1 are taken inside the honest ring in t.
"""

# Native libraries
from functools import reduce

# Local libraries
from . import errors
from .polynomial import LaurentPoly


# ---------------------> Symmetric quantum numbers


def q_number(i: int, var: LaurentPoly) -> LaurentPoly:
	"""[i]_q = q^(i-1) + q^(i-3) + ... + q^(1-i)."""

	if i < 0:
		raise errors.InvalidBoundsError(i)
	return sum((var ** (i - 1 - 2 * j) for j in range(i)), var.vars.zero)

def q_factorial(k: int, var: LaurentPoly) -> LaurentPoly:
	if k < 0:
		raise errors.InvalidBoundsError(k)
	return reduce(lambda acc, i: acc * q_number(i, var), range(1, k + 1), var.vars.one)

def q_binomial(k: int, l: int, var: LaurentPoly) -> LaurentPoly:
	# [k, l] = q^l [k-1, l] + q^-(k-l) [k-1, l-1]
	if not 0 <= l <= k:
		raise errors.InvalidBoundsError(k, l)

	row = [var.vars.one]
	for size in range(1, k + 1):
		row = [
			(var ** j * row[j] if j < size else var.vars.zero) +
			(var ** (j - size) * row[j - 1] if j > 0 else var.vars.zero)
			for j in range(size + 1)
		]
	return row[l]


# ---------------------> One-sided quantum numbers


def t_number(i: int, var: LaurentPoly) -> LaurentPoly:
	"""(i)_t = 1 + t + ... + t^(i-1)."""

	if i < 0:
		raise errors.InvalidBoundsError(i)
	return sum((var ** j for j in range(i)), var.vars.zero)

def t_factorial(k: int, var: LaurentPoly) -> LaurentPoly:
	if k < 0:
		raise errors.InvalidBoundsError(k)
	return reduce(lambda acc, i: acc * t_number(i, var), range(1, k + 1), var.vars.one)

def t_binomial(k: int, l: int, var: LaurentPoly) -> LaurentPoly:
	# Pascal rule: (k, l) = (k-1, l-1) + t^l (k-1, l)
	if not 0 <= l <= k:
		raise errors.InvalidBoundsError(k, l)

	row = [var.vars.one]
	for size in range(1, k + 1):
		row = [
			(row[j - 1] if j > 0 else var.vars.zero) +
			(var ** j * row[j] if j < size else var.vars.zero)
			for j in range(size + 1)
		]
	return row[l]

def t_trinomial(total: int, i: int, j: int, k: int, var: LaurentPoly) -> LaurentPoly:
	"""Factorial trinomial (total)!/((i)!(j)!(k)!) in the one-sided normalisation."""

	if min(i, j, k) < 0 or i + j + k != total:
		raise errors.InvalidCompositionError(total, (i, j, k))
	return t_binomial(total, i, var) * t_binomial(total - i, j, var)
