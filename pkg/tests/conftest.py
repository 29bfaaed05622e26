import pytest

from cyclecomplex.surface import one_vertex_torus, standard_surface


@pytest.fixture(scope="session")
def torus():
    return one_vertex_torus()


@pytest.fixture(scope="session")
def genus2():
    return standard_surface(2)


@pytest.fixture(scope="session")
def genus3():
    return standard_surface(3)
