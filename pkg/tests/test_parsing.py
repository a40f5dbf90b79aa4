# External libraries
import pytest

# Local libraries
from lib.parsing import Command, Signature, errors
from lib.parsing.command import Flag, Parameter, Variable
from lib.parsing.signature import DEFAULT_SIGNATURE_OPERATORS
from lib.parsing.tokenizer import Operator, Token, tokenize
from lib.parsing.typecasting import cast

# Constants
USAGE = '<(str) family> <(int) --n="strands"> [--colored | --induced] [(str) --format="format"]'


class TestTokenizer:
	def test_usage_string(self):
		tokens = tokenize('<(int) --n="strands">', DEFAULT_SIGNATURE_OPERATORS)
		assert tokens == [
			Operator('<', 'open-required-group'),
			Operator('(', 'open-type'),
			Token('int'),
			Operator(')', 'close-type'),
			Operator('--', 'flag-indicator'),
			Token('n'),
			Operator('=', 'variable-indicator'),
			Token('strands'),
			Operator('>', 'close-required-group')
		]

	def test_quotes(self):
		with pytest.raises(errors.ExpectedOperatorError):
			tokenize('--n="strands', DEFAULT_SIGNATURE_OPERATORS)
		with pytest.raises(errors.EmptyGroupError):
			tokenize('--n=""', DEFAULT_SIGNATURE_OPERATORS)

	def test_cast(self):
		assert cast('3') == (3, 'int')
		assert cast('-1') == (-1, 'int')
		assert cast('True') == (True, 'bool')
		assert cast('1 -2') == ('1 -2', 'str')


class TestCommand:
	def test_known_variables_take_a_value(self):
		cmd = Command(['bkl', '--n=3', '--braid', '1 2', '--c'], {'colored': ['c']}, {'n', 'braid'})
		assert cmd.parameters == [Parameter('bkl', 'str')]
		assert cmd.variables == [Variable('n', 3, 'int'), Variable('braid', '1 2', 'str')]
		assert cmd.flags == [Flag('colored')]

	def test_unknown_keys_are_flags(self):
		cmd = Command(['--braid', '1 2'])
		assert cmd.flags == [Flag('braid')]
		assert cmd.parameters == [Parameter('1 2', 'str')]

	def test_negative_letters_are_values(self):
		cmd = Command(['--braid', '-1'], variables={'braid'})
		assert cmd.variables == [Variable('braid', -1, 'int')]

	@pytest.mark.parametrize('argv', [['--n='], ['--=3'], ['--n']])
	def test_missing_values(self, argv):
		with pytest.raises(errors.ExpectedTokenError):
			Command(argv, variables={'n'})


class TestSignature:
	def test_match(self):
		signature = Signature(USAGE)
		cmd = Command(['bkl', '--n', '3', '--colored', '--extra', 'x'], variables=signature.variable_keys())
		matched, unmatched = signature.match(cmd)
		assert matched.parameters == {'family': 'bkl'}
		assert matched.variables == {'n': 3}
		assert matched.flags == ['colored']
		assert unmatched.parameters == ['x']
		assert unmatched.flags == ['extra']
		assert unmatched

	def test_clean_match(self):
		signature = Signature(USAGE)
		_, unmatched = signature.match(Command(['gassner', '--n=2', '--format=latex']))
		assert not unmatched

	def test_variable_keys(self):
		assert Signature(USAGE).variable_keys() == {'n', 'format'}

	def test_exclusive_flags(self):
		with pytest.raises(errors.TooManyMatchesError):
			Signature(USAGE).match(Command(['bkl', '--n=3', '--colored', '--induced']))

	def test_missing_required(self):
		with pytest.raises(errors.NoMatchError):
			Signature(USAGE).match(Command(['bkl']))
		with pytest.raises(errors.NoMatchError):
			Signature(USAGE).match(Command(['--n=3']))

	@pytest.mark.parametrize('argv', [['bkl', '--n=three'], ['3', '--n=3']])
	def test_rejected_types(self, argv):
		with pytest.raises(errors.RejectedTypeError):
			Signature(USAGE).match(Command(argv))

	@pytest.mark.parametrize('usage, error', [
		('<(int) --flag>', errors.RejectedTypeError),
		('(float) x', errors.UnknownTypeError),
		('<n', errors.ExpectedOperatorError),
		('<>', errors.EmptyGroupError),
		('| x', errors.UnexpectedOperatorError)
	])
	def test_malformed_usage(self, usage, error):
		with pytest.raises(error):
			Signature(usage)
