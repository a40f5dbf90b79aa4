from __future__ import annotations

# Native libraries
from typing import Any, Callable, Iterable, Mapping, Sequence

# Local libraries
from . import errors
from .polynomial import LaurentPoly, VarSet, total


# ---------------------> Matrix


class Matrix:
	"""Dense matrix of Laurent polynomials over one VarSet; products skip zero entries."""

	__slots__ = ('vars', 'rows', '_hash')

	def __init__(self, vars: VarSet, rows: Iterable[Iterable[LaurentPoly | int]]) -> None:
		self.vars : VarSet = vars
		self.rows : tuple[tuple[LaurentPoly, ...], ...] = tuple(
			tuple(vars.const(entry) if isinstance(entry, int) else entry for entry in row)
			for row in rows
		)
		self._hash : int | None = None

		widths = {len(row) for row in self.rows}
		if len(widths) > 1:
			raise errors.ShapeMismatchError(tuple(widths), ())
		for row in self.rows:
			for entry in row:
				if entry.vars != vars:
					raise errors.VarSetMismatchError(vars.names, entry.vars.names)

	@classmethod
	def identity(cls, vars: VarSet, size: int) -> Matrix:
		return cls(vars, [[1 if i == j else 0 for j in range(size)] for i in range(size)])

	@classmethod
	def zeros(cls, vars: VarSet, rows: int, columns: int) -> Matrix:
		return cls(vars, [[0] * columns for _ in range(rows)])

	@classmethod
	def from_columns(cls, vars: VarSet, columns: Sequence[Sequence[LaurentPoly | int]]) -> Matrix:
		return cls(vars, zip(*columns)) if columns else cls(vars, [])

	@classmethod
	def from_entries(cls, vars: VarSet, size: int, entries: Mapping[tuple[int, int], LaurentPoly]) -> Matrix:
		"""Square matrix from a sparse {(row, column): entry} map, zero elsewhere."""

		rows = [[vars.zero] * size for _ in range(size)]
		for (i, j), entry in entries.items():
			rows[i][j] = rows[i][j] + entry
		return cls(vars, rows)

	# Shape and access

	@property
	def shape(self) -> tuple[int, int]:
		return len(self.rows), len(self.rows[0]) if self.rows else 0

	def __getitem__(self, index: tuple[int, int]) -> LaurentPoly:
		i, j = index
		return self.rows[i][j]

	def column(self, j: int) -> tuple[LaurentPoly, ...]:
		return tuple(row[j] for row in self.rows)

	@property
	def columns(self) -> tuple[tuple[LaurentPoly, ...], ...]:
		return tuple(zip(*self.rows))

	def submatrix(self, rows: Sequence[int], columns: Sequence[int]) -> Matrix:
		return Matrix(self.vars, [[self.rows[i][j] for j in columns] for i in rows])

	def delete_last(self) -> Matrix:
		"""Drops the last row and the last column."""

		size, width = self.shape
		return self.submatrix(range(size - 1), range(width - 1))

	# Arithmetic

	def _check(self, other: Matrix) -> None:
		if other.vars != self.vars:
			raise errors.VarSetMismatchError(self.vars.names, other.vars.names)

	def __matmul__(self, other: Matrix) -> Matrix:
		self._check(other)
		if self.shape[1] != other.shape[0]:
			raise errors.ShapeMismatchError(self.shape, other.shape)

		width = other.shape[1]
		sparse = [[(j, entry) for j, entry in enumerate(row) if entry] for row in other.rows]
		rows = []
		for row in self.rows:
			cells = [[] for _ in range(width)]
			for k, left in enumerate(row):
				if not left:
					continue
				for j, right in sparse[k]:
					cells[j].append(left * right)
			rows.append([total(cell, self.vars) for cell in cells])
		return Matrix(self.vars, rows)

	def __add__(self, other: Matrix) -> Matrix:
		self._check(other)
		if self.shape != other.shape:
			raise errors.ShapeMismatchError(self.shape, other.shape)
		return Matrix(self.vars, [[a + b for a, b in zip(left, right)] for left, right in zip(self.rows, other.rows)])

	def __neg__(self) -> Matrix:
		return self.map(lambda entry: -entry)

	def __sub__(self, other: Matrix) -> Matrix:
		return self + (-other)

	def scale(self, factor: LaurentPoly | int) -> Matrix:
		return self.map(lambda entry: entry * factor)

	def __pow__(self, power: int) -> Matrix:
		if power < 0:
			return self.inverse() ** -power
		result = Matrix.identity(self.vars, self.shape[0])
		for _ in range(power):
			result = result @ self
		return result

	def map(self, func: Callable[[LaurentPoly], LaurentPoly]) -> Matrix:
		return Matrix(self.vars, [[func(entry) for entry in row] for row in self.rows])

	def transpose(self) -> Matrix:
		return Matrix(self.vars, zip(*self.rows)) if self.rows else self

	def substitute(self, images: Mapping[str, LaurentPoly | int], target: VarSet | None = None) -> Matrix:
		target = target or self.vars
		return Matrix(target, [[entry.substitute(images, target) for entry in row] for row in self.rows])

	def trace(self) -> LaurentPoly:
		return total((self.rows[i][i] for i in range(len(self.rows))), self.vars)

	# Comparison

	def __eq__(self, other: object) -> bool:
		if not isinstance(other, Matrix):
			return NotImplemented
		return self.vars == other.vars and self.rows == other.rows

	def __hash__(self) -> int:
		if self._hash is None:
			self._hash = hash((self.vars, self.rows))
		return self._hash

	def is_zero(self) -> bool:
		return not any(entry for row in self.rows for entry in row)

	def nonzero_entries(self) -> list[tuple[int, int, LaurentPoly]]:
		return [(i, j, entry) for i, row in enumerate(self.rows) for j, entry in enumerate(row) if entry]

	def __str__(self) -> str:
		return '\n'.join('[' + ', '.join(str(entry) for entry in row) + ']' for row in self.rows)

	def __repr__(self) -> str:
		return f'Matrix({self.shape[0]}x{self.shape[1]} over {",".join(self.vars.names)})'

	# Determinants and inverses

	def char_poly(self) -> list[LaurentPoly]:
		return char_poly(self)

	def det(self) -> LaurentPoly:
		coefficients = char_poly(self)
		size = self.shape[0]
		return coefficients[-1] if size % 2 == 0 else -coefficients[-1]

	def inverse(self) -> Matrix:
		return inverse(self)


# ---------------------> Functions


def char_poly(matrix: Matrix) -> list[LaurentPoly]:
	"""Coefficients of det(xI - A) from x^n down to x^0, without any division.

	Peels off the top-left entry: with A = [[a, R], [S, B]] the polynomial of A is a
	lower triangular Toeplitz matrix with first column 1, -a, -RS, -RBS, -RB^2S, ...
	applied to the polynomial of B.
	"""

	vars, size = matrix.vars, matrix.shape[0]
	if size == 0:
		return [vars.one]

	a = matrix[0, 0]
	rest = matrix.submatrix(range(1, size), range(1, size))
	lower = char_poly(rest)

	column = [vars.one, -a]
	if size > 1:
		row = Matrix(vars, [matrix.rows[0][1:]])
		vector = Matrix(vars, [[matrix[i, 0]] for i in range(1, size)])
		for _ in range(size - 1):
			column.append(-(row @ vector)[0, 0])
			vector = rest @ vector
		column = column[:size + 1]

	return [
		total((column[i - j] * lower[j] for j in range(min(i, size - 1) + 1) if i - j < len(column)), vars)
		for i in range(size + 1)
	]

def _components(matrix: Matrix) -> list[list[int]]:
	"""Groups of indices that only interact with each other."""

	size = matrix.shape[0]
	parent = list(range(size))

	def find(i: int) -> int:
		while parent[i] != i:
			parent[i] = parent[parent[i]]
			i = parent[i]
		return i

	for i, j, _ in matrix.nonzero_entries():
		parent[find(i)] = find(j)

	groups = {}
	for i in range(size):
		groups.setdefault(find(i), []).append(i)
	return sorted(groups.values())

def _dense_inverse(matrix: Matrix) -> Matrix:
	# Cayley-Hamilton: A^-1 = -(A^(n-1) + c1 A^(n-2) + ... + c_(n-1) I) / c_n
	vars, size = matrix.vars, matrix.shape[0]
	coefficients = char_poly(matrix)
	constant = coefficients[-1]
	if not constant.is_unit():
		det = constant if size % 2 == 0 else -constant
		raise errors.NotInvertibleError(str(det))

	identity = Matrix.identity(vars, size)
	accumulated = identity.scale(coefficients[0])
	for coefficient in coefficients[1:-1]:
		accumulated = accumulated @ matrix + identity.scale(coefficient)
	return accumulated.scale(-constant.inverse())

def inverse(matrix: Matrix) -> Matrix:
	"""Exact inverse over the Laurent ring; the determinant must be a unit."""

	size, width = matrix.shape
	if size != width:
		raise errors.ShapeMismatchError(matrix.shape, matrix.shape)

	entries = {}
	for group in _components(matrix):
		block = _dense_inverse(matrix.submatrix(group, group))
		for a, i in enumerate(group):
			for b, j in enumerate(group):
				if block[a, b]:
					entries[i, j] = block[a, b]
	return Matrix.from_entries(matrix.vars, size, entries)

def block_matrix(vars: VarSet, size: int, offset: int, block: Sequence[Sequence[Any]]) -> Matrix:
	"""Identity of the given size with a square block placed at offset (0-based)."""

	rows = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
	for a, line in enumerate(block):
		for b, entry in enumerate(line):
			rows[offset + a][offset + b] = entry
	return Matrix(vars, rows)

def collapse_variables(vars: VarSet, prefix: str, var: str) -> tuple[dict[str, LaurentPoly], VarSet]:
	"""Images and target ring sending prefix1, prefix2, ... to the single variable `var`."""

	indexed = [name for name in vars.names if name.startswith(prefix) and name[len(prefix):].isdigit()]
	kept = tuple(name for name in vars.names if name not in indexed and name != var)
	target = VarSet((var,) + kept)
	return {name: target.var(var) for name in indexed}, target

def collapse(matrix: Matrix, prefix: str, var: str) -> Matrix:
	images, target = collapse_variables(matrix.vars, prefix, var)
	return matrix.substitute(images, target)
