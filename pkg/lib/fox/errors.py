class GeneratorBoundsError(Exception):
	def __init__(self, n: int, j: int):
		super().__init__(f'Generator x{j} does not exist in the free group of rank {n}')

class ExponentError(Exception):
	def __init__(self, exponent: int):
		super().__init__(f'Letters carry exponent 1 or -1, got {exponent}')

class ReductionError(Exception):
	def __init__(self, line: str):
		super().__init__(f'Expected the g-basis column of x1...xn to be trivial, got [{line}]')
