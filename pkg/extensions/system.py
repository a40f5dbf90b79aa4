
# Native libraries
import logging, sys
from os.path import basename
from typing import Any

# Local libraries
from lib import utility


# ---------------------> Setup


# Logging
name = basename(__file__)[:-3]
log = logging.getLogger(name)


# ---------------------> System extension


def setup(registry: utility.Registry) -> None:
	registry.add_extension(System(registry))
	log.info(f'Extension has been created: {name}')

class System(utility.Extension):
	name = name
	description = 'Controls internal functionality'

	@utility.command(name='help', description='Lists commands, or the usage of one command')
	@utility.signature_command(usage='[(str) command] [--quiet | --verbose]')
	def help(self, summary: utility.Summary, params: dict[str, Any], flags: list[str], vars: dict[str, Any]) -> None:
		if 'command' in params:
			log.debug('Following command branch for help')
			names = [params['command']]
			self.registry.resolve(params['command'])
		else:
			log.debug('Following listing branch for help')
			names = sorted(self.registry.commands)

		for key in names:
			handler = self.registry.commands[key]
			sys.stdout.write(f'braidrep {key} {handler.signature.raw}\n    {handler.description}\n')

		summary.set_header(f'Listed {len(names)} command(s)')
