# Native libraries
import importlib, logging
from os.path import basename
from typing import Callable

# Local libraries
from . import errors, ui
from .extensions import extension_name
from .search import suggest

# Constants
USAGE_ERROR = 2


# ---------------------> Logging setup


name = basename(__file__)[:-3]
log = logging.getLogger(name)


# ---------------------> Decorators


def command(name: str, description: str = ''):
	# Marks an extension method as a top-level command
	#   - decorator MUST be placed above @signature_command()

	def decorator(func):
		func.command_name = name
		func.description = description
		return func
	return decorator


# ---------------------> Classes


class Extension:
	"""Group of commands loaded from one module under extensions/."""

	name        : str = ''
	description : str = ''

	def __init__(self, registry: 'Registry') -> None:
		self.registry = registry

	def commands(self) -> dict[str, Callable]:
		found = {}
		for attribute in dir(type(self)):
			method = getattr(self, attribute)
			if callable(method) and hasattr(method, 'command_name'):
				found[method.command_name] = method
		return found

class Registry:
	"""Resolves the first shell argument to a command of a loaded extension."""

	def __init__(self) -> None:
		self.extensions : dict[str, Extension] = {}
		self.commands   : dict[str, Callable]  = {}

	def add_extension(self, extension: Extension) -> None:
		commands = extension.commands()
		for key in commands:
			if key in self.commands:
				raise errors.DuplicateCommandError(key)

		self.extensions[extension.name] = extension
		self.commands.update(commands)
		log.debug(f'Registered commands {sorted(commands)} from `{extension.name}`')

	def remove_extension(self, name: str) -> None:
		extension = self.extensions.pop(name)
		for key in extension.commands():
			self.commands.pop(key, None)
		log.debug(f'Removed extension `{name}`')

	def load_extension(self, path: str) -> None:
		module = importlib.import_module(path)
		module.setup(self)
		log.debug(f'Loaded module `{path}` as extension `{extension_name(path)}`')

	def resolve(self, name: str) -> Callable:
		if name not in self.commands:
			raise errors.UnknownCommandError(name, suggest(self.commands, name))
		return self.commands[name]

	def dispatch(self, argv: list[str]) -> int:
		if not argv:
			summary = ui.Summary('braidrep')
			summary.failed = True
			summary.set_header('No command given')
			summary.set_field('Commands', ', '.join(sorted(self.commands)))
			summary.show()
			return USAGE_ERROR

		try:
			handler = self.resolve(argv[0])
		except errors.UnknownCommandError as err:
			log.warning(err)
			summary = ui.Summary(argv[0])
			summary.failed = True
			summary.set_header('Unknown command')
			summary.set_field('UnknownCommandError', str(err))
			summary.set_field('Commands', ', '.join(sorted(self.commands)))
			summary.show()
			return USAGE_ERROR

		log.info(f'Command `{argv[0]}` invoked with {argv[1:]}')
		return handler(argv[1:], argv[0])
