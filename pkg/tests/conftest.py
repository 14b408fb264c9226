import pytest

from trislither import build_grid, enumerate_cycles


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # Trigger JIT compilation once so timed tests measure the work itself.
    list(enumerate_cycles(build_grid(1)))


@pytest.fixture(scope="session")
def g1():
    return build_grid(1)


@pytest.fixture(scope="session")
def g2():
    return build_grid(2)


@pytest.fixture(scope="session")
def g3():
    return build_grid(3)


@pytest.fixture(scope="session")
def g5():
    return build_grid(5)


@pytest.fixture(scope="session")
def g6():
    return build_grid(6)


@pytest.fixture(scope="session")
def g11():
    return build_grid(11)
