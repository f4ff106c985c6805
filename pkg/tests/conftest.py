import pytest

from qmds3 import gf
from qmds3.partition import build_partition


@pytest.fixture(scope="session")
def gf9():
    return gf.make_field(3, 1)


@pytest.fixture(scope="session")
def gf25():
    return gf.make_field(5, 1)


@pytest.fixture(scope="session")
def gf49():
    return gf.make_field(7, 1)


@pytest.fixture(scope="session")
def gf81():
    return gf.make_field(3, 2)


@pytest.fixture(scope="session")
def part9(gf9):
    return build_partition(gf9)


@pytest.fixture(scope="session")
def part25(gf25):
    return build_partition(gf25)
