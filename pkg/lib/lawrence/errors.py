class LevelBoundsError(Exception):
	def __init__(self, n: int, m: int):
		super().__init__(f'Code sequences need n >= 2 and m >= 0, got n={n}, m={m}')

class CodeSequenceError(Exception):
	def __init__(self, ks: tuple, m: int):
		super().__init__(f'{ks} is not a code sequence of level {m}')

class FixedSizeError(Exception):
	def __init__(self, n: int, m: int, expected: tuple):
		super().__init__(f'Only defined for (n, m) = {expected}, got ({n}, {m})')
