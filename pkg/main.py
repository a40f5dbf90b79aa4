
# Native libraries
import json, logging, os, sys
from logging.config import dictConfig

# External libraries
import dotenv

# Local libraries
from lib import utility

# Constants
DEFAULT_LOG_CONFIG = 'logConfig.json'
LOG_DIRECTORY = 'logs'


# ---------------------> Setup


def configure_logging() -> None:
	os.makedirs(LOG_DIRECTORY, exist_ok=True)
	with open(os.getenv('BRAIDREP_LOG_CONFIG', DEFAULT_LOG_CONFIG)) as file:
		dictConfig(json.load(file))

def build_registry() -> utility.Registry:
	log = logging.getLogger('root')
	registry = utility.Registry()

	# Load all extensions
	for ext in utility.yield_extensions(prefix_path=True):
		try:
			registry.load_extension(ext)
		except Exception as err:
			log.error(f'Failed to load extension `{utility.extension_name(ext)}`: {err}')
	return registry


# ---------------------> Main


def main(argv: list[str] | None = None) -> int:
	dotenv.load_dotenv()
	configure_logging()

	registry = build_registry()
	return registry.dispatch(sys.argv[1:] if argv is None else argv)

if __name__ == '__main__':
	sys.exit(main())
