import pytest

from etacalc.constructions import (
    double_pyramid_graph,
    house_graph,
    octahedron_graph,
)
from etacalc.graphs import whitney_complex


@pytest.fixture(scope="session")
def house():
    return whitney_complex(house_graph())


@pytest.fixture(scope="session")
def house_g():
    return house_graph()


@pytest.fixture(scope="session")
def octahedron():
    return whitney_complex(octahedron_graph())


@pytest.fixture(scope="session")
def double_pyramid():
    return whitney_complex(double_pyramid_graph())
