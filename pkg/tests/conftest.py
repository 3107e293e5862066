import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("ci", deadline=None, print_blob=True)
settings.load_profile("ci")


@pytest.fixture
def fixture_text():
    from knotpuzzle.cli import fixture_path

    def read(name: str) -> str:
        return fixture_path(name).read_text()

    return read
