class CutoffError(Exception):
	def __init__(self, index: int, cutoff: int):
		super().__init__(f'Basis vector v{index} lies beyond the truncation v0..v{cutoff}')

class UnknownGeneratorError(Exception):
	def __init__(self, generator: str):
		super().__init__(f'Unknown generator `{generator}`, expected K, E or F')

class SignChoiceError(Exception):
	def __init__(self, sign: int):
		super().__init__(f'Sign choice must be 1 or -1, got {sign}')
