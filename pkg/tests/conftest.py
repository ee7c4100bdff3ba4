import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ncgb.words import Alphabet


@pytest.fixture(scope="session")
def ab():
    """Two-letter alphabet a > b."""
    return Alphabet(["a", "b"])


@pytest.fixture(scope="session")
def xy():
    """Two-letter alphabet x > y."""
    return Alphabet(["x", "y"])
