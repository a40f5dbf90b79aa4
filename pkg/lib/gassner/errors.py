class GradingMismatchError(Exception):
	def __init__(self, perm: object):
		super().__init__(f'No block is graded by the permutation {perm}')

class DimensionMismatchError(Exception):
	def __init__(self, dimension: int, shape: tuple):
		super().__init__(f'Expected blocks of size {dimension}x{dimension}, got {shape}')

class BlockBoundsError(Exception):
	def __init__(self, n: int, i: int):
		super().__init__(f'Block index {i} does not fit a matrix on {n} strands')
