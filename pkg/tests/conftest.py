import pytest

from congforge import build_ctx, build_specials


@pytest.fixture(scope="session")
def ctx5():
    return build_ctx(5, 5)


@pytest.fixture(scope="session")
def ctx13():
    return build_ctx(13, 5)


@pytest.fixture(scope="session")
def sp5():
    return build_specials(5)


@pytest.fixture(scope="session")
def sp13():
    return build_specials(13)
