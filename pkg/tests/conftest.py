import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qlab.constructions import c2, c3, corpus, endomorphism_quantale, swap_locale, z2
from qlab.lattice import make_diamond_m5

DATA = Path(__file__).resolve().parent.parent / "data"

# element names used in the tests for the 3-chain locale
ZERO, M, ONE = 0, 1, 2


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture
def C2():
    return c2()


@pytest.fixture
def Z2():
    return z2()


@pytest.fixture
def C3():
    return c3()


@pytest.fixture
def SWAP():
    return swap_locale()


@pytest.fixture(scope="session")
def endo_m5():
    return endomorphism_quantale(make_diamond_m5())


@pytest.fixture(scope="session")
def small_corpus():
    return corpus(4)


@pytest.fixture(scope="session")
def star_corpus():
    return corpus(4, with_star=True)
