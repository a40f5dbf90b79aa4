
# Native libraries
import logging, sys
from os.path import basename
from typing import Any

# Local libraries
from lib import harness, utility
from lib.braid import BraidWord

# Constants
DEFAULT_FORMAT = 'json'
CODE_BASIS = 'code'


# ---------------------> Setup


# Logging
name = basename(__file__)[:-3]
log = logging.getLogger(name)


# ---------------------> Representation extension


def setup(registry: utility.Registry) -> None:
	registry.add_extension(Representations(registry))
	log.info(f'Extension has been created: {name}')

class Representations(utility.Extension):
	name = name
	description = 'Builds representation matrices of braid words'

	@utility.command(name='rep', description='Prints the matrix of a braid word in one representation family')
	@utility.signature_command(
		usage='<(str) family> <(int) --n="strands"> [(int) --m="points"] <(any) --braid="word"> [--colored | --induced] '
			  '[(str) --specialize="assignments"] [(str) --format="format"] [(str) --basis="basis"] [--quiet | --verbose]',
		thesaurus={'colored': ['c'], 'induced': ['i'], 'format': ['f'], 'specialize': ['s']}
	)
	def rep(self, summary: utility.Summary, params: dict[str, Any], flags: list[str], vars: dict[str, Any]) -> None:
		family = harness.find_family(params['family'])
		word = BraidWord.parse(str(vars['braid']), vars['n'])
		m = vars.get('m', harness.families.DEFAULT_LEVEL)

		# Only the Lawrence family has a choice of basis, and only code sequences are built
		if 'basis' in vars and (family.name != 'lawrence' or vars['basis'] != CODE_BASIS):
			raise harness.errors.UnknownBasisError(family.name, vars['basis'])

		mode = 'colored' if 'colored' in flags else 'induced' if 'induced' in flags else 'plain'
		result = family.build(word, m, mode)
		log.info(f'Built {mode} {family.name} matrix of `{word}` on {word.n} strands')

		if 'specialize' in vars:
			result = harness.specialize(result, vars['specialize'])
			log.debug(f'Specialized with `{vars["specialize"]}`')

		payload = harness.export_matrix(result, vars.get('format', DEFAULT_FORMAT))
		sys.stdout.write(payload.decode('utf8'))
		if not payload.endswith(b'\n'):
			sys.stdout.write('\n')

		summary.set_header(f'Built {family.name} matrix')
		summary.set_field('Word', str(word) or 'empty')
		summary.set_field('Mode', mode)
		summary.set_field('Variables', ', '.join(result.vars.names))
