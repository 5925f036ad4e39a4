import pytest

from minorcast.graph import Graph
from minorcast.topology import ChimeraSpec, gen_chimera


@pytest.fixture
def k2():
    return Graph.from_edges(2, [(0, 1)])


@pytest.fixture
def k3():
    return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def path3():
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def cycle4():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def k44():
    return gen_chimera(ChimeraSpec(L=4, M=1, N=1))


@pytest.fixture
def single():
    return Graph.from_edges(1, [])
