# Native libraries
from typing import Any, Literal, Tuple

# Local libraries
from . import errors

# Constants
VALID_TYPES = ['any', 'int', 'str', 'bool']


# ---------------------> Functions


def cast(raw: Any) -> Tuple[Any, Literal['str', 'int', 'bool']]:
	"""Casts a raw value to a native type, falling back to str."""

	raw = str(raw)
	try:
		return int(raw), 'int'
	except ValueError:
		if raw.lower() in ('true', 'false'):
			return raw.lower() == 'true', 'bool'
		return raw, 'str'

def parse(raw: str) -> Literal['any', 'str', 'int', 'bool']:
	"""Validates a type written inside a usage signature."""

	if raw in VALID_TYPES:
		return raw
	raise errors.UnknownTypeError(raw)
