import pytest

from hypcatenoid import Tolerance, constants_bundle


@pytest.fixture(scope="session")
def tol():
    return Tolerance()


@pytest.fixture(scope="session")
def bundle(tol):
    return constants_bundle(tol)
