import itertools
import os
import tempfile

import networkx as nx
import pytest

from minorcast.exceptions import (
    DuplicateEdgeError,
    GraphFormatError,
    InvalidVertexError,
    SelfLoopError,
)
from minorcast.graph import (
    Graph,
    Path,
    contract_edge,
    contract_edge_with_mapping,
    distances_within,
    enumerate_paths,
    is_connected_subset,
    load_graph,
    read_graph_file,
    save_graph,
    shortest_distance,
    write_graph_file,
)


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def k44():
    return Graph.from_edges(8, [(a, b) for a in range(4) for b in range(4, 8)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_load_graph():
    g = load_graph("0 1\n1 2")
    assert g.num_vertices == 3
    assert g.edges == frozenset({(0, 1), (1, 2)})


def test_load_graph_header_and_comments():
    g = load_graph("# a comment\np 4\n0 1  # trailing\n\n")
    assert g.num_vertices == 4
    assert g.num_edges == 1
    assert g.adjacency[3] == ()


def test_load_graph_normalizes_orientation():
    g = load_graph("2 0\n1 0")
    assert g.sorted_edges() == [(0, 1), (0, 2)]


def test_load_graph_empty():
    g = load_graph("")
    assert g.num_vertices == 0
    assert g.num_edges == 0


@pytest.mark.parametrize(
    "text, error, line",
    [
        ("0 0", SelfLoopError, 1),
        ("0 1\n1 0", DuplicateEdgeError, 2),
        ("0 1\n1 x", GraphFormatError, 2),
        ("0 1 2", GraphFormatError, 1),
        ("p 3\n0 3", GraphFormatError, 2),
        ("p 3\np 3", GraphFormatError, 2),
        ("0 -1", GraphFormatError, 1),
    ],
)
def test_load_graph_errors(text, error, line):
    with pytest.raises(error) as excinfo:
        load_graph(text)
    assert excinfo.value.line_number == line
    assert str(excinfo.value).startswith(f"line {line}:")


def test_save_graph_roundtrip_file():
    g = Graph.from_edges(5, [(3, 1), (0, 1)])
    assert save_graph(g) == "p 5\n0 1\n1 3\n"
    with tempfile.TemporaryDirectory() as tmp_dir:
        path = os.path.join(tmp_dir, "g.txt")
        write_graph_file(g, path)
        assert read_graph_file(path) == g


def test_read_graph_file_missing():
    with pytest.raises(ValueError):
        read_graph_file("/definitely/not/a/graph.txt")


def test_graph_invariants():
    with pytest.raises(SelfLoopError):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(DuplicateEdgeError):
        Graph.from_edges(2, [(0, 1), (1, 0)])
    with pytest.raises(InvalidVertexError):
        Graph.from_edges(2, [(0, 2)])
    g = k44()
    rebuilt = {(u, v) for u in range(8) for v in g.adjacency[u] if u < v}
    assert rebuilt == set(g.edges)
    assert g.degree(0) == 4
    assert g.has_edge(5, 1)


def test_from_networkx_labels():
    g = Graph.from_networkx(nx.Graph([("b", "a"), ("b", "c")]))
    assert g.labels == ("a", "b", "c")
    assert g.edges == frozenset({(0, 1), (1, 2)})
    assert g.label(2) == "c"


def test_shortest_distance():
    g = k44()
    assert shortest_distance(g, 0, 0) == 0
    assert shortest_distance(g, 0, 1) == 2
    assert shortest_distance(g, 0, 4) == 1
    split = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert shortest_distance(split, 0, 3) is None
    with pytest.raises(InvalidVertexError):
        shortest_distance(g, 0, 8)


def test_enumerate_paths_examples():
    g = k44()
    assert enumerate_paths(g, 0, 4, 2) == [Path((0, 4))]
    paths = enumerate_paths(g, 0, 1, 3)
    assert len(paths) == 4
    assert all(len(p.interior) == 1 for p in paths)
    assert paths == sorted(paths)
    assert enumerate_paths(path_graph(4), 0, 3, 3) == []
    with pytest.raises(ValueError):
        enumerate_paths(g, 0, 0, 3)
    with pytest.raises(ValueError):
        enumerate_paths(g, 0, 1, 1)


@pytest.mark.parametrize("seed", range(5))
def test_enumerate_paths_properties(seed):
    g = Graph.from_networkx(nx.gnp_random_graph(8, 0.4, seed=seed))
    for u, v in itertools.combinations(range(g.num_vertices), 2):
        previous = set()
        for k in range(2, g.num_vertices + 1):
            paths = enumerate_paths(g, u, v, k)
            assert previous <= set(paths)
            for p in paths:
                assert p.size <= k
                assert p.endpoints == (u, v)
                assert p.is_valid_in(g)
            previous = set(paths)
        distance = shortest_distance(g, u, v)
        if distance is None:
            assert not previous
        else:
            assert min(p.size for p in previous) - 1 == distance


def test_distances_within():
    reach = distances_within(path_graph(5), 2)
    assert reach[0] == {0: 0, 1: 1, 2: 2}
    assert 3 not in reach[0]


def test_is_connected_subset():
    g = path_graph(3)
    assert is_connected_subset(g, {1})
    assert is_connected_subset(g, set())
    assert not is_connected_subset(g, {0, 2})
    assert is_connected_subset(g, {0, 1, 2})
    with pytest.raises(InvalidVertexError):
        is_connected_subset(g, {0, 5})


def test_contract_edge_examples():
    triangle = cycle(3)
    contracted = contract_edge(triangle, (0, 1))
    assert contracted.num_vertices == 2
    assert contracted.edges == frozenset({(0, 1)})

    square = contract_edge(cycle(4), (1, 2))
    assert square.num_vertices == 3
    assert square.edges == frozenset({(0, 1), (0, 2), (1, 2)})

    single = contract_edge(Graph.from_edges(2, [(0, 1)]), (0, 1))
    assert single.num_vertices == 1
    assert single.num_edges == 0

    with pytest.raises(ValueError):
        contract_edge(path_graph(3), (0, 2))


def test_contract_edge_mapping_and_labels():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)], labels=["a", "b", "c", "d"])
    contracted, mapping = contract_edge_with_mapping(g, (1, 2))
    assert mapping == {0: 0, 1: 1, 2: 1, 3: 2}
    assert contracted.labels == ("a", "b+c", "d")
    assert contracted.edges == frozenset({(0, 1), (1, 2)})


@pytest.mark.parametrize("seed", range(5))
def test_contract_edge_properties(seed):
    g = Graph.from_networkx(nx.gnp_random_graph(9, 0.5, seed=seed))
    for e in g.sorted_edges():
        contracted = contract_edge(g, e)
        assert contracted.num_vertices == g.num_vertices - 1
        assert all(u < v for u, v in contracted.edges)
