import itertools

import networkx as nx
import pytest

from minorcast.topology import ChimeraSpec, expected_chimera_counts, gen_chimera
from minorcast.topology.chimera import cell_qubits, cross_couplers


@pytest.mark.parametrize(
    "L, M, N", list(itertools.product(range(1, 5), repeat=3))
)
def test_counts_match_closed_form(L, M, N):
    spec = ChimeraSpec(L=L, M=M, N=N)
    g = gen_chimera(spec)
    assert (g.num_vertices, g.num_edges) == expected_chimera_counts(spec)
    assert g.num_vertices == 2 * L * M * N
    assert nx.is_bipartite(g.nx_graph)


def test_examples():
    single = gen_chimera(ChimeraSpec(L=4, M=1, N=1))
    assert (single.num_vertices, single.num_edges) == (8, 16)
    row = gen_chimera(ChimeraSpec(L=4, M=1, N=2))
    assert (row.num_vertices, row.num_edges) == (16, 36)
    assert gen_chimera(ChimeraSpec(L=4, M=16, N=16)).num_vertices == 2048


def test_spec_validation():
    with pytest.raises(ValueError):
        ChimeraSpec(L=0, M=1, N=1)


def test_cells_and_couplers():
    spec = ChimeraSpec(L=4, M=1, N=2)
    g = gen_chimera(spec)
    left = cell_qubits(spec, 0, 0, 0)
    right = cell_qubits(spec, 0, 0, 1)
    assert all(g.has_edge(a, b) for a in left for b in right)
    couplers = cross_couplers(spec, (0, 0), (0, 1))
    assert len(couplers) == 4
    assert all(g.has_edge(a, b) for a, b in couplers)
    cell_a = set(cell_qubits(spec, 0, 0, 0) + cell_qubits(spec, 0, 0, 1))
    assert all(a in cell_a and b not in cell_a for a, b in couplers)
    assert cross_couplers(spec, (0, 1), (0, 0)) == sorted((b, a) for a, b in couplers)


def test_labels_are_coordinates():
    g = gen_chimera(ChimeraSpec(L=4, M=1, N=2))
    assert g.label(0) == "(0, 0, 0, 0)"
    assert g.label(15) == "(0, 1, 1, 3)"
