class WrapperError(Exception):
	def __init__(self, reason: str = 'Incorrect wrapper use'):
		super().__init__(reason)

class UnknownANSIStrokeError(Exception):
	def __init__(self, stroke: str):
		super().__init__(f'Unknown ANSI stroke `{stroke}` given')

class UnknownANSIColourError(Exception):
	def __init__(self, colour: str):
		super().__init__(f'Unknown ANSI colour `{colour}` given')

class UnknownCommandError(Exception):
	def __init__(self, name: str, suggestion: str | None = None):
		hint = f', did you mean `{suggestion}`?' if suggestion else ''
		super().__init__(f'Unknown command `{name}`{hint}')

class DuplicateCommandError(Exception):
	def __init__(self, name: str):
		super().__init__(f'Command `{name}` is already registered')
