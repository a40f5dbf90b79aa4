# Native libraries
import sys
from typing import TextIO

# Local libraries
from . import errors

# Constants
STROKES = {
	'default': '0',
	'bold': '1',
	'underline': '4'
}
COLOURS = {
	'default': '39',
	'grey': '90',
	'red': '31',
	'green': '32',
	'yellow': '33',
	'blue': '34',
	'magenta': '35',
	'cyan': '36',
	'white': '37'
}


# ---------------------> External Classes


class ANSIFactory:
	"""Builds terminal text; with `enabled` off the escape sequences are left out."""

	def __init__(self, enabled: bool = True) -> None:
		self.enabled = enabled
		self.text = ''

	def __str__(self) -> str:
		return self.text

	def newline(self) -> None:
		self.text += '\n'

	def add_raw(self, text: str) -> None:
		self.text += text

	def add(self, text: str, colour: str = 'default', stroke: str = 'default') -> None:
		if stroke not in STROKES:
			raise errors.UnknownANSIStrokeError(stroke)
		if colour not in COLOURS:
			raise errors.UnknownANSIColourError(colour)

		if self.enabled:
			self.text += f'\033[{STROKES[stroke]};{COLOURS[colour]}m{text}\033[0m'
		else:
			self.text += text

class Summary:
	"""What a command did, printed to stderr so stdout only carries results."""

	def __init__(self, command: str) -> None:
		self.command = command
		self.header = ''
		self.fields = {}
		self.failed = False

	def set_header(self, header: str) -> None:
		self.header = header

	def set_field(self, name: str, value: str) -> None:
		self.fields[name] = value

	def render(self, colour: bool = False) -> str:
		factory = ANSIFactory(colour)
		factory.add(self.header, 'red' if self.failed else 'green', 'bold')
		for name, value in self.fields.items():
			factory.newline()
			factory.add(f'  {name}: ', 'cyan')
			factory.add_raw(value)
		factory.newline()
		return str(factory)

	def show(self, stream: TextIO | None = None) -> None:
		stream = stream or sys.stderr
		stream.write(self.render(stream.isatty()))
