class VarSetMismatchError(Exception):
	def __init__(self, left: tuple, right: tuple):
		super().__init__(f'Variable sets differ ({", ".join(left)}) vs ({", ".join(right)})')

class DuplicateVariableError(Exception):
	def __init__(self, names: tuple):
		super().__init__(f'Variable names must be unique, got ({", ".join(names)})')

class UnknownVariableError(Exception):
	def __init__(self, name: str):
		super().__init__(f'Unknown Variable({name})')

class NonInvertibleImageError(Exception):
	def __init__(self, name: str, image: str):
		super().__init__(f'Variable {name} occurs with a negative exponent but its image `{image}` is not a unit')

class NotAUnitError(Exception):
	def __init__(self, poly: str):
		super().__init__(f'`{poly}` is not a unit of the Laurent ring')

class InvalidBoundsError(Exception):
	def __init__(self, *bounds: int):
		super().__init__(f'Invalid bounds {bounds}')

class InvalidCompositionError(Exception):
	def __init__(self, total: int, parts: tuple):
		super().__init__(f'{parts} is not a composition of {total}')

class ShapeMismatchError(Exception):
	def __init__(self, left: tuple, right: tuple):
		super().__init__(f'Incompatible shapes {left} and {right}')

class NotInvertibleError(Exception):
	def __init__(self, det: str):
		super().__init__(f'Matrix is not invertible over the Laurent ring, determinant is `{det}`')

class ParseError(Exception):
	def __init__(self, raw: str):
		super().__init__(f'Cannot read `{raw}` as a Laurent polynomial')
