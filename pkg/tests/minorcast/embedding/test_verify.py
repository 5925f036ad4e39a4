import pytest

from minorcast.embedding import Embedding, verify_embedding
from minorcast.exceptions import InvalidVertexError
from minorcast.topology import illustrative_example, gen_chimera


def test_identity_is_valid(k2):
    report = verify_embedding(Embedding.from_models({0: [0], 1: [1]}), k2, k2)
    assert report.valid
    assert report.kinds() == []


def test_disconnected_model(path3, single):
    report = verify_embedding(Embedding.from_models({0: [0, 2]}), path3, single)
    assert report.kinds() == ["disconnected-model"]


def test_overlap_and_missing(k2, path3):
    report = verify_embedding(Embedding.from_models({0: [0], 1: [0, 1]}), path3, k2)
    assert "overlap" in report.kinds()
    report = verify_embedding(Embedding.from_models({0: [0]}), path3, k2)
    assert report.kinds() == ["missing-vertex", "uncovered-edge"]


def test_uncovered_edge(k3, path3):
    embedding = Embedding.from_models({0: [0], 1: [1], 2: [2]})
    report = verify_embedding(embedding, path3, k3)
    assert report.kinds() == ["uncovered-edge"]
    assert len(report.violations) == 1


def test_chain_embeds_triangle(k3, cycle4):
    embedding = Embedding.from_models({0: [0, 1], 1: [2], 2: [3]})
    assert verify_embedding(embedding, cycle4, k3).valid


def test_out_of_range(k2):
    with pytest.raises(InvalidVertexError):
        verify_embedding(Embedding.from_models({0: [0], 1: [2]}), k2, k2)
    with pytest.raises(InvalidVertexError):
        verify_embedding(Embedding.from_models({0: [0], 5: [1]}), k2, k2)


def test_illustrative_witness():
    instance = illustrative_example()
    embedding = Embedding.from_models(instance.witness)
    assert embedding.size == 13
    assert verify_embedding(embedding, gen_chimera(instance.target), instance.graph).valid
