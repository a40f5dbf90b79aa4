# Native libraries
import logging
from copy import deepcopy
from functools import wraps
from os.path import basename

# Local libraries
from . import errors, ui
from lib import parsing

# Constants
DEFAULT_COMMAND_THESAURUS = {
	'quiet': ['q'],
	'verbose': ['v'],
}
USAGE_ERROR = 2
INTERNAL_ERROR = 1


# ---------------------> Logging setup


name = basename(__file__)[:-3]
log = logging.getLogger(name)


# ---------------------> Internal Functions


def _is_user_error(err: Exception) -> bool:
	# Library errors describe bad input, anything else is a bug
	if isinstance(err, parsing.errors.UnknownObjectError):
		return False
	module = type(err).__module__
	return module.startswith('lib.') and module.endswith('.errors')

def _usage(prog: str, signature: parsing.Signature) -> str:
	return f'braidrep {prog}{" " + signature.raw if signature.raw else ""}'


# ---------------------> Wrappers


def signature_command(usage: str = '', thesaurus: dict[str, list[str]] = {}):
	# Wraps around commands to match argv to a signature, catches illegal commands and irrelevant arguments
	#   - incoming func MUST follow (self, summary, params, flags, vars) -> int | None
	#   - outgoing func follows (self, argv, prog) -> int
	#   - decorator MUST be placed below @command() decorator

	signature = parsing.Signature(usage)
	temp = deepcopy(DEFAULT_COMMAND_THESAURUS)
	temp.update(thesaurus)
	thesaurus = temp

	def decorator(func):
		if hasattr(func, 'signature_command'):
			raise errors.WrapperError('Method is already a signature command')

		@wraps(func)
		def wrapped(self, argv: list[str], prog: str = '') -> int:
			prog = prog or func.__name__
			summary = ui.Summary(prog)
			summary.set_header(f'Resolved {prog} command')

			# Parse and match command
			try:
				command = parsing.Command(argv, thesaurus, signature.variable_keys())
				matched, unmatched = signature.match(command)

			except Exception as err:
				if not _is_user_error(err):
					log.exception(f'Internal error while parsing `{prog}`')
					summary.failed = True
					summary.set_header('Internal error')
					summary.set_field(type(err).__name__, str(err))
					summary.show()
					return INTERNAL_ERROR

				log.warning(f'Invalid `{prog}` command: {err}')
				summary.failed = True
				summary.set_header('Invalid command')
				summary.set_field(type(err).__name__, str(err))
				summary.set_field('Usage', _usage(prog, signature))
				summary.show()
				return USAGE_ERROR

			# Warn about unmatched parameters, flags and variables
			if unmatched.parameters:
				summary.set_field('Irrelevant parameters', ', '.join(map(str, unmatched.parameters)))
			if unmatched.flags:
				summary.set_field('Irrelevant flags', ', '.join(f'--{flag}' for flag in unmatched.flags))
			if unmatched.variables:
				summary.set_field('Irrelevant variables', ', '.join(f'--{key}' for key in unmatched.variables))
			if unmatched:
				log.warning(f'Ignored irrelevant arguments for `{prog}`: {unmatched}')
				summary.set_field('Usage', _usage(prog, signature))

			# Invoke command
			try:
				code = func(self, summary, matched.parameters, matched.flags, matched.variables) or 0

			except Exception as err:
				summary.failed = True
				summary.set_field(type(err).__name__, str(err))
				if _is_user_error(err):
					log.warning(f'Command `{prog}` rejected its input: {err}')
					summary.set_header(f'Failed to run {prog} command')
					summary.set_field('Usage', _usage(prog, signature))
					code = USAGE_ERROR
				else:
					log.exception(f'Internal error while running `{prog}`')
					summary.set_header('Internal error')
					code = INTERNAL_ERROR

			if 'quiet' not in matched.flags and (summary.failed or unmatched or 'verbose' in matched.flags):
				summary.show()
			return code

		wrapped.signature_command = True
		wrapped.signature = signature
		return wrapped
	return decorator
