class StrandBoundsError(Exception):
	def __init__(self, n: int, minimum: int = 2):
		super().__init__(f'Expected at least {minimum} strands, got {n}')

class ForkIndexError(Exception):
	def __init__(self, n: int, j: int, k: int):
		super().__init__(f'Fork ({j},{k}) needs 1 <= j < k <= {n}')
