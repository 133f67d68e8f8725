import pytest

from dirichlet_toolkit import PrimeTable


@pytest.fixture(scope="session")
def table_small():
    return PrimeTable(1000)


@pytest.fixture(scope="session")
def table_mid():
    return PrimeTable(30_000)


@pytest.fixture(scope="session")
def table_proj():
    return PrimeTable(140_000)
