import sys
from pathlib import Path
from typing import Callable

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

import pytest

from graver_certs.config import Settings
from graver_certs.services.graver.limits import GraverLimits

FIXTURES_DIR = Path(__file__).resolve().parent / "fixtures"


@pytest.fixture
def load_fixture() -> Callable[[str], str]:
    def _loader(filename: str) -> str:
        return (FIXTURES_DIR / filename).read_text(encoding="utf-8")

    return _loader


@pytest.fixture
def fixture_path() -> Callable[[str], str]:
    def _path(filename: str) -> str:
        return str(FIXTURES_DIR / filename)

    return _path


@pytest.fixture
def test_settings() -> Settings:
    return Settings(
        max_elements=5_000,
        max_pair_reductions=2_000_000,
        oracle_max_vectors=2_000_000,
        max_enumerated_circuits=100_000,
        log_level="DEBUG",
    )


@pytest.fixture
def tight_limits() -> GraverLimits:
    return GraverLimits(
        max_elements=5,
        max_pair_reductions=50,
        oracle_max_vectors=100,
        max_enumerated_circuits=10,
    )
