from __future__ import annotations

# Local libraries
from lib.gassner import errors as gassner_errors
from lib.ring import LaurentPoly, Matrix

# Constants
LOCAL_BASIS = ('v0⊗v0', 'v1⊗v0', 'v0⊗v1')


# ---------------------> R-matrix on weights up to one


def r_matrix_weight1(s1: LaurentPoly, s2: LaurentPoly) -> Matrix:
	"""R on span{v0⊗v0, v1⊗v0, v0⊗v1}, columns are images.

	v0⊗v0 -> v0⊗v0
	v1⊗v0 -> s1 v0⊗v1 + (s2^2 - 1) v1⊗v0
	v0⊗v1 -> s2 v1⊗v0
	"""

	vars = s1.vars
	return Matrix.from_columns(vars, [
		[1, 0, 0],
		[0, s2 ** 2 - 1, s1],
		[0, s2, 0]
	])

def r_matrix_local(n: int, k: int, s1: LaurentPoly, s2: LaurentPoly | None = None, vacuum: int = 1) -> Matrix:
	"""The same R on factors k, k+1 of n, basis (v0...v0, f1, ..., fn) with f_i carrying v1 at slot i.

	`vacuum` rescales the local v0⊗v0. As printed (vacuum 1) the weight one block fails the braid
	relation; with vacuum -1 it is minus the quantum action with sign -1.
	"""

	if not 1 <= k < n:
		raise gassner_errors.BlockBoundsError(n, k)

	local = r_matrix_weight1(s1, s1 if s2 is None else s2)
	vacuum_image = s1.vars.const(vacuum)
	# Local basis index -> global basis index
	embed = {0: 0, 1: k, 2: k + 1}
	# Every f_i away from k, k+1 and the global vacuum see a local v0⊗v0
	rows = [[vacuum_image if i == j else 0 for j in range(n + 1)] for i in range(n + 1)]
	for a, i in embed.items():
		for b, j in embed.items():
			rows[i][j] = local[a, b] * vacuum_image if (a, b) == (0, 0) else local[a, b]
	return Matrix(s1.vars, rows)
