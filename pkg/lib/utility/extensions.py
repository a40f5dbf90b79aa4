# Native libraries
from pathlib import Path
from typing import Generator

# Constants
DEFAULT_EXTENSION_PATH = Path(__file__).resolve().parents[2] / 'extensions'


# ---------------------> External Functions


def yield_extensions(sys_path: Path = DEFAULT_EXTENSION_PATH, prefix_path: bool = False) -> Generator[str, None, None]:
	# Yields every extension module in sys_path, sorted so commands register in a stable order
	#   - prefix_path toggles prefixing with the package name      default is False

	for file in sorted(Path(sys_path).glob('*.py')):
		if file.stem.startswith('_'):
			continue
		yield f'{Path(sys_path).name}.{file.stem}' if prefix_path else file.stem

def extension_name(extension_path: str) -> str:
	# Returns extension name from extension path
	#   - extension_path contains path to extension with `.` seperation

	return extension_path.split('.')[-1]
