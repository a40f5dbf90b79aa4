# Native libraries
import random
from pathlib import Path

# External libraries
import pytest

# Local libraries
from lib.ring import VarSet

# Constants
ROOT = Path(__file__).resolve().parents[1]
SEED = 42


@pytest.fixture
def xy() -> VarSet:
	return VarSet.of('x', 'y')

@pytest.fixture
def st_ring() -> VarSet:
	return VarSet.of('s', 't')

@pytest.fixture
def rng() -> random.Random:
	return random.Random(SEED)

@pytest.fixture
def workspace(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
	"""Runs the CLI from a scratch directory with the repository log configuration."""

	monkeypatch.chdir(tmp_path)
	monkeypatch.setenv('BRAIDREP_LOG_CONFIG', str(ROOT / 'logConfig.json'))
	monkeypatch.delenv('BRAIDREP_SEED', raising=False)
	monkeypatch.delenv('BRAIDREP_SAMPLES', raising=False)
	monkeypatch.delenv('BRAIDREP_VERMA_CUTOFF', raising=False)
	return tmp_path
