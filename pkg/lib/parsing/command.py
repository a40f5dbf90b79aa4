from __future__ import annotations

# Native imports
from dataclasses import dataclass
from functools import singledispatchmethod as overload
from typing import Any, Iterable, Literal

# Local imports
from . import typecasting, errors, tokenizer

# Constants
DEFAULT_COMMAND_OPERATORS = {
	'flag-indicator': '--',
	'variable-indicator': '='
	}


# ---------------------> Dataclasses


class Token:
	...

@dataclass
class Parameter(Token):
	value      : Any
	value_type : Literal['str', 'int', 'bool']

@dataclass
class Flag(Token):
	key : str

@dataclass
class Variable(Token):
	key        : str
	value      : Any
	value_type : Literal['str', 'int', 'bool']


# ---------------------> Classes


class Command:
	"""Shell arguments split into positional parameters, bare flags and keyed variables.

	`--key=value` is always a variable; `--key value` is one only when `key` is listed
	in `variables`, otherwise `--key` is a flag and `value` a parameter.
	"""

	def __init__(self, argv: list[str], thesaurus: dict[str, list[str]] | None = None, variables: Iterable[str] = ()) -> None:
		self.raw        : str = ' '.join(argv)
		self.thesaurus  : dict[str, list[str]] = thesaurus or {}
		self.keys       : set[str] = set(variables)
		self.parameters : list[Parameter] = []
		self.flags      : list[Flag]      = []
		self.variables  : list[Variable]  = []

		tokens = tokenizer.tokenize_argv(argv, DEFAULT_COMMAND_OPERATORS)
		self.__parse_command(tokens)

	def __get_synonym(self, key: str) -> str:
		for synonym, keys in self.thesaurus.items():
			if key in keys:
				return synonym
		return key

	def __parse_command(self, tokens: list[tokenizer.Token]) -> None:
		while tokens:
			token = tokens.pop(0)
			if type(token) == tokenizer.Operator:
				if token.operator != 'flag-indicator':
					raise errors.UnexpectedOperatorError(token.operator)

				# Collect key
				if not tokens or type(tokens[0]) == tokenizer.Operator:
					raise errors.ExpectedTokenError(token.raw)
				raw_key = tokens.pop(0).raw
				key = self.__get_synonym(raw_key)

				# Handle --key=value
				if tokens and type(tokens[0]) == tokenizer.Operator and tokens[0].operator == 'variable-indicator':
					tokens.pop(0)
					if not tokens or type(tokens[0]) == tokenizer.Operator:
						raise errors.ExpectedTokenError(f'--{raw_key}=')
					self.__add_variable(key, tokens.pop(0).raw)
					continue

				# Handle --key value for known variables
				if key in self.keys:
					if not tokens or type(tokens[0]) == tokenizer.Operator:
						raise errors.ExpectedTokenError(f'--{raw_key}')
					self.__add_variable(key, tokens.pop(0).raw)
					continue

				self.flags.append(Flag(key))

			elif type(token) == tokenizer.Token:
				value, value_type = typecasting.cast(token.raw)
				self.parameters.append(Parameter(value, value_type))

			else:
				raise errors.UnknownObjectError(token)

	def __add_variable(self, key: str, raw: str) -> None:
		value, value_type = typecasting.cast(raw)
		self.variables.append(Variable(key, value, value_type))

	@overload
	def remove(self, obj: Any) -> None:
		"""Remove a parameter, flag or variable from the command."""

		raise TypeError(f'Expected Parameter, Flag or Variable, got {type(obj)}')

	@remove.register
	def _(self, obj: Parameter) -> None:
		self.parameters.remove(obj)

	@remove.register
	def _(self, obj: Flag) -> None:
		self.flags.remove(obj)

	@remove.register
	def _(self, obj: Variable) -> None:
		self.variables.remove(obj)
