import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable

from attprimes.corpus import example24
from attprimes.polycore import Ring


@pytest.fixture(scope="session")
def ring4():
    return Ring(("X", "Y", "Z", "W"))


@pytest.fixture(scope="session")
def ring2():
    return Ring(("X", "Y"))


@pytest.fixture(scope="session")
def corpus():
    # One shared instance: immutable values, cached Groebner bases.
    return example24()
