import os
import pathlib

import pytest

from minorcast.bench import CSV_COLUMNS, BenchRun, expand_manifest, run_bench, run_single
from minorcast.utils.util import load_yaml_config

root_dir = pathlib.PurePath(os.path.dirname(os.path.realpath(__file__))).parent
resource_dir = os.path.join(root_dir, "resources")


def test_expand_manifest_grid():
    manifest = {
        "defaults": {"target": "chimera:4,1,2", "time_limit": 300},
        "runs": [
            {
                "family": "structured",
                "params": {"zeta": [0, 1, 2, 3], "seed": list(range(10)), "p_inter": 0.5},
                "method": ["monolithic", "decomposition"],
                "objective": "min-size",
            }
        ],
    }
    runs = expand_manifest(manifest)
    assert len(runs) == 4 * 10 * 2
    first = runs[0]
    assert first.instance_id == "structured_zeta=0_seed=0_p_inter=0.5"
    assert first.method == "monolithic"
    assert first.objective == "min_size"
    assert first.target == "chimera:4,1,2"
    assert first.time_limit == 300
    assert first.params == {"zeta": 0, "seed": 0, "p_inter": 0.5}
    assert len({(r.instance_id, r.method) for r in runs}) == len(runs)


def test_expand_manifest_source_rows():
    runs = expand_manifest(
        {"runs": [{"source": "graphs/k5.txt", "target": "chimera:4,1,1", "k": [2, 3]}]}
    )
    assert [r.instance_id for r in runs] == ["k5", "k5"]
    assert [r.k for r in runs] == [2, 3]
    assert runs[0].method == "decomposition"


def test_expand_manifest_named_rows():
    runs = expand_manifest(
        {
            "defaults": {"family": "er", "params": {"nu": 5, "p": [0.3, 0.5]}},
            "runs": [
                {"name": "er_c411", "target": "chimera:4,1,1"},
                {"name": "er_c422", "target": "chimera:4,2,2"},
                {"family": None, "source": "illustrative", "name": "fig", "target": "chimera:4,1,2"},
            ],
        }
    )
    assert [r.instance_id for r in runs] == [
        "er_c411_nu=5_p=0.3",
        "er_c411_nu=5_p=0.5",
        "er_c422_nu=5_p=0.3",
        "er_c422_nu=5_p=0.5",
        "fig",
    ]
    assert runs[-1].source == "illustrative"
    assert runs[-1].family is None


@pytest.mark.parametrize(
    "manifest, error",
    [
        ({}, KeyError),
        ({"runs": [{"target": "chimera:4,1,1"}]}, ValueError),
        ({"runs": [{"source": "a.txt", "family": "er", "target": "x"}]}, ValueError),
        ({"runs": [{"source": "a.txt"}]}, ValueError),
    ],
)
def test_expand_manifest_errors(manifest, error):
    with pytest.raises(error):
        expand_manifest(manifest)


def test_run_single_records_failure():
    record = run_single(
        BenchRun(instance_id="broken", target="chimera:4,1,1", source="missing.txt")
    )
    assert record["status"] == "error"
    assert "missing.txt" in record["error"]
    assert set(record) == set(CSV_COLUMNS)


def test_run_single_timeout_row():
    record = run_single(
        BenchRun(
            instance_id="k3",
            source="er:3,1.0,0",
            target="chimera:4,1,1",
            method="monolithic",
            node_limit=1,
            warm_start=False,
        )
    )
    assert record["status"] == "timeout"
    assert record["error"] is None
    assert record["bound"] is not None


def test_run_bench_is_reproducible():
    manifest = os.path.join(resource_dir, "bench_small.yaml")
    serial = run_bench(manifest)
    parallel = run_bench(manifest, jobs=2)
    assert list(serial.columns) == CSV_COLUMNS
    assert list(serial["instance_id"]) == ["er_3_1.0_0", "er_3_1.0_0", "er_nu=2_p=1.0"]
    columns = [c for c in CSV_COLUMNS if c != "time"]
    assert serial[columns].equals(parallel[columns])
    assert list(serial["status"]) == ["optimal"] * 3
    assert list(serial["iterations"])[0] >= 1


@pytest.mark.parametrize(
    "file_name, count",
    [
        ("structured_sweep.yaml", 4 * 10 * 2 * 2),
        ("erdos_renyi_sweep.yaml", 3 * 36 + 2 * 36),
        ("illustrative.yaml", 2),
    ],
)
def test_sample_manifests_expand(file_name, count):
    sample_dir = os.path.join(root_dir.parent, "sample_config", "bench")
    runs = expand_manifest(load_yaml_config(os.path.join(sample_dir, file_name)))
    assert len(runs) == count
    assert len({(r.instance_id, r.method, r.objective) for r in runs}) == count
