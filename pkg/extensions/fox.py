
# Native libraries
import logging, sys
from os.path import basename
from typing import Any

# Local libraries
from lib import fox, harness, utility
from lib.braid import BraidWord

# Constants
VARIANTS = {
	'gassner': fox.gassner_matrix,
	'reduced': fox.reduced_magnus_matrix
}


# ---------------------> Setup


# Logging
name = basename(__file__)[:-3]
log = logging.getLogger(name)


# ---------------------> Fox calculus extension


def setup(registry: utility.Registry) -> None:
	registry.add_extension(FoxCalculus(registry))
	log.info(f'Extension has been created: {name}')

class FoxCalculus(utility.Extension):
	name = name
	description = 'Magnus matrices from free differential calculus'

	@utility.command(name='fox', description='Prints the Fox calculus Gassner matrix, or the reduced one of a pure braid')
	@utility.signature_command(usage='<(str) variant> <(int) --n="strands"> <(any) --braid="word"> [--quiet | --verbose]')
	def fox(self, summary: utility.Summary, params: dict[str, Any], flags: list[str], vars: dict[str, Any]) -> None:
		variant = params['variant']
		if variant not in VARIANTS:
			raise harness.errors.UnsupportedModeError('fox', variant)

		word = BraidWord.parse(str(vars['braid']), vars['n'])
		result = VARIANTS[variant](word)
		log.info(f'Computed {variant} Fox matrix of `{word}` on {word.n} strands')

		sys.stdout.write(harness.export_matrix(result, 'json').decode('utf8') + '\n')
		summary.set_header(f'Computed {variant} matrix')
		summary.set_field('Word', str(word) or 'empty')
