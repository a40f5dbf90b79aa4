from __future__ import annotations

# Native libraries
import logging
from os.path import basename
from typing import Mapping

# Local libraries
from . import errors
from .algebra import FreeWord, GroupRingElement, word_sum
from lib.braid import BraidWord, is_pure
from lib.braid import errors as braid_errors
from lib.gassner import gamma
from lib.ring import LaurentPoly, Matrix, VarSet, total

# Constants
VARIABLE_PREFIX = 't'

name = basename(__file__)[:-3]
log = logging.getLogger(name)


# ---------------------> Fox derivatives


def fox_derivative(element: GroupRingElement | FreeWord, j: int) -> GroupRingElement:
	"""∂/∂x_j, extended linearly: x_j contributes its prefix, x_j^-1 minus its prefix including itself."""

	if j < 1:
		raise errors.GeneratorBoundsError(0, j)
	if isinstance(element, FreeWord):
		element = GroupRingElement.of(element)

	terms = {}
	for word, coeff in element.terms.items():
		for position, (generator, exponent) in enumerate(word.letters):
			if generator != j:
				continue
			if exponent == 1:
				prefix, sign = FreeWord(word.letters[:position]), 1
			else:
				prefix, sign = FreeWord(word.letters[:position + 1]), -1
			terms[prefix] = terms.get(prefix, 0) + sign * coeff
	return GroupRingElement(terms)

def abelianize(element: GroupRingElement | FreeWord, target: VarSet, images: Mapping[int, LaurentPoly] | None = None) -> LaurentPoly:
	# Sends generator j to images[j], by default to the j-th variable of the target
	if isinstance(element, FreeWord):
		element = GroupRingElement.of(element)

	cache = {}
	def image(generator: int) -> LaurentPoly:
		if generator not in cache:
			if images is not None:
				cache[generator] = images[generator]
			elif generator > len(target):
				raise errors.GeneratorBoundsError(len(target), generator)
			else:
				cache[generator] = target.var(target.names[generator - 1])
		return cache[generator]

	summands = []
	for word, coeff in element.terms.items():
		monomial = target.const(coeff)
		for generator, exponent in word.letters:
			monomial = monomial * image(generator) ** exponent
		summands.append(monomial)
	return total(summands, target)


# ---------------------> Artin action


def _act(index: int, sign: int, word: FreeWord) -> FreeWord:
	# σ_i: x_i -> x_i x_(i+1) x_i^-1, x_(i+1) -> x_i; σ_i^-1: x_i -> x_(i+1), x_(i+1) -> x_(i+1)^-1 x_i x_(i+1)
	if sign == 1:
		images = {
			index: ((index, 1), (index + 1, 1), (index, -1)),
			index + 1: ((index, 1),)
		}
	else:
		images = {
			index: ((index + 1, 1),),
			index + 1: ((index + 1, -1), (index, 1), (index + 1, 1))
		}

	letters = []
	for generator, exponent in word.letters:
		image = images.get(generator, ((generator, 1),))
		letters.extend(image if exponent == 1 else FreeWord(image).inverse().letters)
	return FreeWord(tuple(letters))

def artin_action(word: BraidWord, x: FreeWord) -> FreeWord:
	"""w.x with the rightmost letter substituted first, so (uv).x = u.(v.x)."""

	for generator, _ in x.letters:
		if not 1 <= generator <= word.n:
			raise errors.GeneratorBoundsError(word.n, generator)

	for index, sign in reversed(word.letters):
		x = _act(index, sign, x)
	return x


# ---------------------> Magnus matrices


def variables(n: int) -> VarSet:
	return VarSet.indexed(VARIABLE_PREFIX, n)

def magnus_matrix(word: BraidWord) -> Matrix:
	"""Entry (i, j) is the abelianized ∂(w.x_i)/∂x_j."""

	n = word.n
	vars = variables(n)
	rows = []
	for i in range(1, n + 1):
		image = artin_action(word, FreeWord.generator(i))
		rows.append([abelianize(fox_derivative(image, j), vars) for j in range(1, n + 1)])
	return Matrix(vars, rows)

def gassner_matrix(word: BraidWord) -> Matrix:
	"""Magnus matrix in the column convention, the form that specializes to the Burau product."""

	return magnus_matrix(word).transpose()

def _to_g_letters(word: FreeWord) -> FreeWord:
	# x_k = g_(k-1)^-1 g_k with g_0 = 1
	letters = []
	for generator, exponent in word.letters:
		piece = ((generator - 1, -1), (generator, 1)) if generator > 1 else ((1, 1),)
		letters.extend(piece if exponent == 1 else FreeWord(piece).inverse().letters)
	return FreeWord(tuple(letters))

def g_basis_matrix(word: BraidWord) -> Matrix:
	"""Gassner matrix of a pure braid in the basis g_i = x1...x_i, column convention.

	Column i holds the abelianized derivatives of the image of g_i, so the last column is
	the image of the fixed boundary word x1...xn and reads (0, ..., 0, 1).
	"""

	if not is_pure(word):
		raise braid_errors.NotPureError(str(word))

	n = word.n
	vars = variables(n)
	images, running = {}, vars.one
	for j in range(1, n + 1):
		running = running * vars.var(vars.names[j - 1])
		images[j] = running

	columns, prefix = [], FreeWord()
	for i in range(1, n + 1):
		prefix = prefix * artin_action(word, FreeWord.generator(i))
		image = _to_g_letters(prefix)
		columns.append([abelianize(fox_derivative(image, j), vars, images) for j in range(1, n + 1)])
	return Matrix.from_columns(vars, columns)

def reduced_magnus_matrix(word: BraidWord) -> Matrix:
	"""g_basis_matrix with its trivial last column checked and the last row and column removed."""

	matrix = g_basis_matrix(word)
	size = matrix.shape[0]
	last = matrix.column(size - 1)
	if any(entry != 0 for entry in last[:-1]) or last[-1] != 1:
		raise errors.ReductionError(', '.join(map(str, last)))

	log.debug(f'Reduced Magnus matrix of `{word}` on {size} strands')
	return matrix.delete_last()


# ---------------------> Identities


def fundamental_residual(element: GroupRingElement | FreeWord, n: int) -> GroupRingElement:
	"""Σ_j ∂e/∂x_j (x_j - 1) - (e - ε(e)), which vanishes identically."""

	if isinstance(element, FreeWord):
		element = GroupRingElement.of(element)

	augmentation = sum(element.terms.values())
	pieces = [
		fox_derivative(element, j) * (GroupRingElement.of(FreeWord.generator(j)) - 1)
		for j in range(1, n + 1)
	]
	return word_sum(pieces) - element + augmentation

def dictionary_matrix(n: int) -> Matrix:
	"""D = diag(1 - t1, ..., 1 - tn), which carries the Fox matrix onto the over-strand one."""

	vars = variables(n)
	return Matrix.from_entries(vars, n, {(i, i): 1 - vars.var(name) for i, name in enumerate(vars.names)})

def dictionary_residual(word: BraidWord) -> Matrix:
	"""Γ(w)·D - D·gassner_matrix(w), zero for every pure braid."""

	if not is_pure(word):
		raise braid_errors.NotPureError(str(word))

	conjugator = dictionary_matrix(word.n)
	return gamma(word) @ conjugator - conjugator @ gassner_matrix(word)
