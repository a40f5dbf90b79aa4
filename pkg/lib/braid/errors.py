class IndexBoundsError(Exception):
	def __init__(self, n: int, index: int):
		super().__init__(f'Generator index {index} is out of range for {n} strands')

class StrandCountError(Exception):
	def __init__(self, n: int):
		super().__init__(f'Expected at least 1 strand, got {n}')

class PureGeneratorBoundsError(Exception):
	def __init__(self, n: int, r: int, s: int):
		super().__init__(f'A({r},{s}) needs 1 <= r < s <= {n}')

class NotPureError(Exception):
	def __init__(self, word: str):
		super().__init__(f'Braid `{word}` is not pure')

class StrandMismatchError(Exception):
	def __init__(self, left: int, right: int):
		super().__init__(f'Cannot combine braids on {left} and {right} strands')

class InvalidPermutationError(Exception):
	def __init__(self, images: tuple):
		super().__init__(f'{images} is not a permutation')

class WordSyntaxError(Exception):
	def __init__(self, raw: str):
		super().__init__(f'Cannot read `{raw}` as a braid word, expected signed nonzero integers')
