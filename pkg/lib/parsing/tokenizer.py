# Native imports
from dataclasses import dataclass

# Local libraries
from . import errors


# ---------------------> Classes


@dataclass
class Token:
	raw : str

@dataclass
class Operator(Token):
	raw      : str
	operator : str


# ---------------------> Functions


def tokenize(raw: str, operators: dict[str, str]) -> list[Token]:
	"""Tokenizes a usage string seperated by greedy-matched operators and spaces."""

	index = 0
	tokens = []
	aggregate = ''
	quote = operators.get('long-parameter-indicator')
	while index < len(raw):

		# Match quoted label
		if quote and raw[index] == quote:
			if aggregate:
				tokens.append(Token(aggregate))
				aggregate = ''

			closing = raw.find(quote, index + 1)
			if closing < 0:
				raise errors.ExpectedOperatorError('long-parameter-indicator')
			if closing == index + 1:
				raise errors.EmptyGroupError()
			tokens.append(Token(raw[index + 1:closing]))
			index = closing + 1
			continue

		# Consume whitespace
		if raw[index].isspace():
			if aggregate:
				tokens.append(Token(aggregate))
				aggregate = ''
			index += 1
			continue

		# Match operator
		match, longest_operator = None, 0
		for name, operator in operators.items():
			if raw.startswith(operator, index) and len(operator) > longest_operator:
				match, longest_operator = name, len(operator)

		if match:
			if aggregate:
				tokens.append(Token(aggregate))
				aggregate = ''

			tokens.append(Operator(operators[match], match))
			index += longest_operator
			continue

		aggregate += raw[index]
		index += 1

	if aggregate:
		tokens.append(Token(aggregate))
	return tokens

def tokenize_argv(argv: list[str], operators: dict[str, str]) -> list[Token]:
	"""Tokenizes shell arguments; values keep their spaces since the shell already grouped them."""

	flag, assign = operators['flag-indicator'], operators['variable-indicator']
	tokens = []
	for arg in argv:
		if not arg.startswith(flag) or arg == flag:
			tokens.append(Token(arg))
			continue

		tokens.append(Operator(flag, 'flag-indicator'))
		key, found, value = arg[len(flag):].partition(assign)
		if not key:
			raise errors.ExpectedTokenError(arg)
		tokens.append(Token(key))
		if found:
			tokens.append(Operator(assign, 'variable-indicator'))
			if value:
				tokens.append(Token(value))
	return tokens
