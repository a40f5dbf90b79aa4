from __future__ import annotations

# Native libraries
from dataclasses import dataclass, field
from typing import Any, Literal, Tuple

# Local libraries
from . import errors, tokenizer, typecasting, command

# Constants
DEFAULT_SIGNATURE_OPERATORS = {
	'open-required-group': '<',
	'close-required-group': '>',
	'open-optional-group': '[',
	'close-optional-group': ']',
	'open-type': '(',
	'close-type': ')',
	'flag-indicator': '--',
	'variable-indicator': '=',
	'xor-seperator': '|',
	'long-parameter-indicator': '"'
	}


# ---------------------> Dataclasses


class Slot:
	required : bool = True

@dataclass
class Group(Slot):
	group_type : Literal['and', 'xor']
	slots      : list[Slot]
	required   : bool = True

	def __str__(self) -> str:
		inner = (' | ' if self.group_type == 'xor' else ' ').join(map(str, self.slots))
		return f'<{inner}>' if self.required else f'[{inner}]'

@dataclass
class Parameter(Slot):
	key        : str
	value_type : Literal['str', 'int', 'bool', 'any']

	def __str__(self) -> str:
		return self.key

@dataclass
class Flag(Slot):
	key : str

	def __str__(self) -> str:
		return f'--{self.key}'

@dataclass
class Variable(Slot):
	key        : str
	label      : str
	value_type : Literal['str', 'int', 'bool', 'any']

	def __str__(self) -> str:
		return f'--{self.key}={self.label}'

@dataclass
class Matched:
	parameters : dict[str, Any] = field(default_factory=dict)
	flags      : list[str]      = field(default_factory=list)
	variables  : dict[str, Any] = field(default_factory=dict)

@dataclass
class Unmatched:
	parameters : list[Any]      = field(default_factory=list)
	flags      : list[str]      = field(default_factory=list)
	variables  : dict[str, Any] = field(default_factory=dict)

	def __bool__(self) -> bool:
		return bool(self.parameters or self.flags or self.variables)


# ---------------------> Classes


class Signature:
	"""Usage string such as `(str) family <(int) --n="strands"> [--colored | --induced]`.

	Bare words are positional parameters, `--key` flags, `--key="label"` variables and
	`(type)` types the slot that follows. `<...>` groups are required, `[...]` groups
	optional, and `|` makes a group accept at most one of its slots.
	"""

	def __init__(self, raw: str) -> None:
		self.raw       : str = raw
		self.signature : Group = self.__parse_group(tokenizer.tokenize(raw, DEFAULT_SIGNATURE_OPERATORS), True)

	def __parse_group(self, tokens: list[tokenizer.Token], required: bool) -> Group:
		group_type, slots, value_type = 'and', [], None

		while tokens:
			token = tokens.pop(0)
			if type(token) == tokenizer.Token:
				slots.append(Parameter(token.raw, value_type or 'any'))
				value_type = None
				continue

			# Nested groups
			if token.operator in ('open-required-group', 'open-optional-group'):
				is_required = token.operator == 'open-required-group'
				opening = token.operator
				closing = 'close-required-group' if is_required else 'close-optional-group'
				inner, depth = [], 1
				while True:
					if not tokens:
						raise errors.ExpectedOperatorError(closing)
					token = tokens.pop(0)
					if type(token) == tokenizer.Operator:
						depth += token.operator == opening
						depth -= token.operator == closing
						if not depth:
							break
					inner.append(token)

				if not inner:
					raise errors.EmptyGroupError()
				if value_type:
					raise errors.RejectedTypeError(str(inner[0].raw), value_type)
				slots.append(self.__parse_group(inner, is_required))

			# Types
			elif token.operator == 'open-type':
				if value_type or len(tokens) < 2 or type(tokens[0]) == tokenizer.Operator:
					raise errors.UnexpectedOperatorError('open-type')
				value_type = typecasting.parse(tokens.pop(0).raw)
				token = tokens.pop(0)
				if type(token) == tokenizer.Token or token.operator != 'close-type':
					raise errors.ExpectedOperatorError('close-type')

			# Flags and variables
			elif token.operator == 'flag-indicator':
				if not tokens or type(tokens[0]) == tokenizer.Operator:
					raise errors.ExpectedTokenError(token.raw)
				key = tokens.pop(0).raw

				if tokens and type(tokens[0]) == tokenizer.Operator and tokens[0].operator == 'variable-indicator':
					tokens.pop(0)
					if not tokens or type(tokens[0]) == tokenizer.Operator:
						raise errors.ExpectedTokenError(f'--{key}=')
					slots.append(Variable(key, tokens.pop(0).raw, value_type or 'any'))
					value_type = None
					continue

				if value_type:
					raise errors.RejectedTypeError(key, value_type)
				slots.append(Flag(key))

			elif token.operator == 'xor-seperator':
				if not slots:
					raise errors.UnexpectedOperatorError('xor-seperator')
				group_type = 'xor'

			else:
				raise errors.UnexpectedOperatorError(token.operator)

		if value_type:
			raise errors.RejectedTypeError('the last slot', value_type)
		if not slots:
			raise errors.EmptyGroupError()
		return Group(group_type, slots, required)

	def variable_keys(self) -> set[str]:
		"""Keys of every variable slot, so `--key value` can be told apart from a flag."""

		keys, stack = set(), [self.signature]
		while stack:
			slot = stack.pop()
			if type(slot) == Group:
				stack.extend(slot.slots)
			elif type(slot) == Variable:
				keys.add(slot.key)
		return keys

	def match(self, cmd: command.Command) -> Tuple[Matched, Unmatched]:
		"""Matches a command to the signature and returns the matched and unmatched parameters, variables and flags."""

		matched = Matched()

		def recurse(slot: Slot) -> bool:
			# True when the slot consumed part of the command

			if type(slot) == Group:
				hits = [recurse(child) for child in slot.slots]
				if slot.group_type == 'xor':
					if sum(hits) > 1:
						raise errors.TooManyMatchesError(str(slot))
					if slot.required and not any(hits):
						raise errors.NoMatchError(str(slot))
				elif slot.required or any(hits):
					for child, hit in zip(slot.slots, hits):
						if child.required and not hit:
							raise errors.NoMatchError(str(child))
				return any(hits)

			if type(slot) == Parameter:
				if not cmd.parameters:
					return False
				parameter = cmd.parameters[0]
				if slot.value_type not in ('any', parameter.value_type):
					raise errors.RejectedTypeError(slot.key, slot.value_type)
				matched.parameters[slot.key] = parameter.value
				cmd.remove(parameter)
				return True

			if type(slot) == Flag:
				for flag in cmd.flags:
					if flag.key == slot.key:
						matched.flags.append(flag.key)
						cmd.remove(flag)
						return True
				return False

			if type(slot) == Variable:
				for variable in cmd.variables:
					if variable.key == slot.key:
						if slot.value_type not in ('any', variable.value_type):
							raise errors.RejectedTypeError(f'--{slot.key}', slot.value_type)
						matched.variables[slot.key] = variable.value
						cmd.remove(variable)
						return True
				return False

			raise errors.UnknownObjectError(slot)

		recurse(self.signature)

		unmatched = Unmatched(
			[parameter.value for parameter in cmd.parameters],
			[flag.key for flag in cmd.flags],
			{variable.key: variable.value for variable in cmd.variables}
		)
		return matched, unmatched
