import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from xmodloop import fixtures

FIXTURES_DIR = Path(__file__).parent / "fixtures"


@pytest.fixture(params=list(fixtures.FIXTURE_NAMES))
def any_xmod(request):
    return fixtures.all_fixtures()[request.param]


@pytest.fixture
def fixture_path():
    def path_of(name: str) -> Path:
        return FIXTURES_DIR / f"{name}.json"

    return path_of


def all_base_pairs():
    """Every (fixture, base element) pair, 19 in total."""
    pairs = []
    for name, x in fixtures.all_fixtures().items():
        for a in x.P.elements:
            pairs.append((name, a))
    return pairs
