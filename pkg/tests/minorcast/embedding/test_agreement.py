import itertools
import random

import networkx as nx
import pytest

from minorcast.embedding import (
    EmbedProblem,
    oracle_min_embedding,
    solve_decomposition,
    solve_monolithic,
    verify_embedding,
)
from minorcast.graph import Graph

SOURCES = {
    "triangle": [(0, 1), (1, 2), (0, 2)],
    "path": [(0, 1), (1, 2)],
    "square": [(0, 1), (1, 2), (2, 3), (0, 3)],
    "diamond": [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)],
    "star": [(0, 1), (0, 2), (0, 3)],
}


def random_instance(seed):
    rng = random.Random(seed)
    n = rng.randint(4, 7)
    target = Graph.from_networkx(nx.gnp_random_graph(n, rng.uniform(0.35, 0.7), seed=seed))
    name = sorted(SOURCES)[seed % len(SOURCES)]
    edges = SOURCES[name]
    num_sources = 1 + max(v for e in edges for v in e)
    return target, Graph.from_edges(num_sources, edges)


@pytest.mark.parametrize("seed", range(24))
def test_decomposition_matches_oracle(seed):
    X, Y = random_instance(seed)
    expected = oracle_min_embedding(X, Y)
    result = solve_decomposition(EmbedProblem(X, Y))
    if not expected.feasible:
        assert result.status == "infeasible"
        return
    assert result.status == "optimal"
    assert result.size == expected.size
    assert verify_embedding(result.embedding, X, Y).valid


@pytest.mark.parametrize("seed", range(24))
def test_monolithic_matches_oracle(seed):
    X, Y = random_instance(seed)
    expected = oracle_min_embedding(X, Y)
    result = solve_monolithic(EmbedProblem(X, Y, k=3))
    if not expected.feasible:
        assert result.status == "infeasible"
        return
    if expected.embedding.max_fiber <= 3:
        assert result.status == "optimal"
        assert result.size == expected.size
    if result.embedding is not None:
        assert result.size >= expected.size
        assert result.embedding.max_fiber <= 3
        assert verify_embedding(result.embedding, X, Y).valid


@pytest.mark.parametrize("seed", range(6))
def test_feasibility_finds_valid_embedding(seed):
    X, Y = random_instance(100 + seed)
    expected = oracle_min_embedding(X, Y)
    result = solve_decomposition(EmbedProblem(X, Y, objective="feasible"))
    if not expected.feasible:
        assert result.status == "infeasible"
        return
    assert result.status == "feasible"
    assert result.best_bound == Y.num_vertices
    assert verify_embedding(result.embedding, X, Y).valid

    if expected.embedding.max_fiber <= 3:
        result = solve_monolithic(EmbedProblem(X, Y, k=3, objective="feasible"))
        assert result.status == "feasible"
        assert verify_embedding(result.embedding, X, Y).valid


def test_small_complete_pairs():
    for n, m in itertools.product(range(2, 6), range(2, 5)):
        X = Graph.from_edges(n, list(itertools.combinations(range(n), 2)))
        Y = Graph.from_edges(m, list(itertools.combinations(range(m), 2)))
        result = solve_decomposition(EmbedProblem(X, Y))
        if m > n:
            assert result.status == "infeasible"
        else:
            assert result.status == "optimal"
            assert result.size == m


def er_instance(seed, n, p):
    rng = random.Random(seed)
    target = Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))
    name = sorted(SOURCES)[rng.randrange(len(SOURCES))]
    edges = SOURCES[name]
    num_sources = 1 + max(v for e in edges for v in e)
    return target, Graph.from_edges(num_sources, edges)


@pytest.mark.parametrize("seed", range(36))
def test_uncapped_monolithic_matches_oracle(seed):
    X, Y = er_instance(seed, 4 + seed % 3, (0.3, 0.5, 0.7)[seed // 3 % 3])
    expected = oracle_min_embedding(X, Y)
    result = solve_monolithic(
        EmbedProblem(X, Y, k=X.num_vertices, warm_start=seed % 2 == 0)
    )
    if not expected.feasible:
        assert result.status == "infeasible"
        return
    assert result.status == "optimal"
    assert result.size == expected.size
    assert result.best_bound == expected.size
    assert verify_embedding(result.embedding, X, Y).valid


@pytest.mark.parametrize("seed", range(9))
def test_uncapped_monolithic_feasibility_matches_oracle(seed):
    X, Y = er_instance(500 + seed, 5 + seed % 3, (0.3, 0.5, 0.7)[seed // 3])
    expected = oracle_min_embedding(X, Y)
    result = solve_monolithic(
        EmbedProblem(X, Y, k=X.num_vertices, objective="feasible", warm_start=False)
    )
    if not expected.feasible:
        assert result.status == "infeasible"
        return
    assert result.status == "feasible"
    assert verify_embedding(result.embedding, X, Y).valid
