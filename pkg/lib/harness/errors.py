class UnknownSuiteError(Exception):
	def __init__(self, name: str, suggestion: str | None = None):
		hint = f', did you mean `{suggestion}`?' if suggestion else ''
		super().__init__(f'Unknown suite `{name}`{hint}')

class UnknownFormatError(Exception):
	def __init__(self, name: str):
		super().__init__(f'Unknown export format `{name}`, expected json, latex or csv-monomial')

class UnsupportedResultError(Exception):
	def __init__(self, result: object):
		super().__init__(f'Cannot summarise or export a {type(result).__name__}')

class UnknownFamilyError(Exception):
	def __init__(self, name: str, suggestion: str | None = None):
		hint = f', did you mean `{suggestion}`?' if suggestion else ''
		super().__init__(f'Unknown representation family `{name}`{hint}')

class UnsupportedModeError(Exception):
	def __init__(self, family: str, mode: str):
		super().__init__(f'Family `{family}` has no {mode} form')

class UnknownBasisError(Exception):
	def __init__(self, family: str, basis: str):
		super().__init__(f'Family `{family}` cannot be written in the `{basis}` basis')

class AssignmentError(Exception):
	def __init__(self, raw: str):
		super().__init__(f'Cannot read `{raw}` as comma-separated `var=expr` assignments')
