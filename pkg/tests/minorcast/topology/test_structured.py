import networkx as nx
import pytest

from minorcast.embedding import Embedding, verify_embedding
from minorcast.exceptions import GeneratorRetryError
from minorcast.topology import (
    ChimeraSpec,
    StructuredSpec,
    gen_chimera,
    gen_structured,
    gen_structured_instance,
    illustrative_example,
)


def witness_is_valid(instance):
    target = gen_chimera(instance.target)
    embedding = Embedding.from_models(instance.witness)
    return verify_embedding(embedding, target, instance.graph).valid


def test_full_probabilities_give_chimera_row():
    graph = gen_structured(StructuredSpec(zeta=0, p_inter=1.0, p_intra=1.0, cells=2))
    assert graph == gen_chimera(ChimeraSpec(L=4, M=1, N=2))


@pytest.mark.parametrize("zeta", range(5))
def test_contractions_with_complete_biclique(zeta):
    instance = gen_structured_instance(
        StructuredSpec(zeta=zeta, p_inter=1.0, p_intra=1.0, cells=2, seed=zeta)
    )
    assert instance.graph.num_vertices == 16 - zeta
    assert len(instance.contracted) == zeta
    assert sum(len(q) for q in instance.witness.values()) == 16
    assert witness_is_valid(instance)


@pytest.mark.parametrize("seed", range(12))
@pytest.mark.parametrize("cells", [2, 4])
def test_random_instances_embed_by_witness(seed, cells):
    instance = gen_structured_instance(
        StructuredSpec(zeta=seed % 3, p_inter=0.6, p_intra=0.4, cells=cells, seed=seed)
    )
    assert nx.is_connected(instance.graph.nx_graph)
    assert instance.target.M == (1 if cells == 2 else 2)
    assert witness_is_valid(instance)


def test_deterministic_given_seed():
    spec = StructuredSpec(zeta=1, p_inter=0.5, p_intra=0.5, seed=3)
    first, second = gen_structured_instance(spec), gen_structured_instance(spec)
    assert first.graph == second.graph
    assert first.witness == second.witness
    assert first.metadata() == second.metadata()


def test_every_random_component_is_attached():
    for seed in range(20):
        instance = gen_structured_instance(
            StructuredSpec(zeta=0, p_inter=0.3, p_intra=0.0, seed=seed)
        )
        assert nx.is_connected(instance.graph.nx_graph)
        if instance.graph.num_vertices > 8:
            assert instance.forced_attachments >= 1


def test_retry_exhaustion():
    with pytest.raises(GeneratorRetryError):
        gen_structured_instance(StructuredSpec(zeta=1, p_inter=0.0, max_retries=3))


def test_illustrative_example():
    instance = illustrative_example()
    assert instance.graph.num_vertices == 12
    assert sum(len(q) for q in instance.witness.values()) == 13
    assert witness_is_valid(instance)
    assert nx.is_connected(instance.graph.nx_graph)
    assert instance.target == ChimeraSpec(L=4, M=1, N=2)
