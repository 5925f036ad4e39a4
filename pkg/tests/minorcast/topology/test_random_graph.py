import pytest

from minorcast.topology import ErdosRenyiSpec, gen_erdos_renyi


def test_extreme_probabilities():
    empty = gen_erdos_renyi(ErdosRenyiSpec(nu=6, p=0.0))
    assert empty.num_vertices == 6
    assert empty.num_edges == 0
    complete = gen_erdos_renyi(ErdosRenyiSpec(nu=6, p=1.0))
    assert complete.num_edges == 15


def test_deterministic_given_seed():
    spec = ErdosRenyiSpec(nu=10, p=0.5, seed=7)
    assert gen_erdos_renyi(spec).edges == gen_erdos_renyi(spec).edges
    others = {gen_erdos_renyi(ErdosRenyiSpec(nu=10, p=0.5, seed=s)).edges for s in range(5)}
    assert len(others) > 1


def test_spec_validation():
    with pytest.raises(ValueError):
        ErdosRenyiSpec(nu=5, p=1.5)
    with pytest.raises(ValueError):
        ErdosRenyiSpec(nu=0, p=0.5)
