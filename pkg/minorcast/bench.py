import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import pandas as pd
from tqdm import tqdm

from minorcast.embedding.schema import EmbedProblem
from minorcast.milp import SolveLimits
from minorcast.support import get_support_methods
from minorcast.topology.factory import build_spec, generate, resolve_graph
from minorcast.utils.util import load_yaml_config, make_combinations, measure_speed

logger = logging.getLogger("MinorCast")

CSV_COLUMNS = [
	"instance_id",
	"method",
	"objective",
	"status",
	"size",
	"bound",
	"gap",
	"time",
	"iterations",
	"cuts",
	"error",
]

RUN_KEYS = [
	"method",
	"objective",
	"k",
	"time_limit",
	"node_limit",
	"warm_start",
	"target",
]


@dataclass
class BenchRun:
	instance_id: str
	target: str
	method: str = "decomposition"
	objective: str = "min_size"
	k: Optional[int] = None
	time_limit: Optional[float] = 300.0
	node_limit: Optional[int] = None
	warm_start: bool = True
	source: Optional[str] = None
	family: Optional[str] = None
	params: Optional[Dict[str, Any]] = None


def _instance_id(row: Dict, params: Dict[str, Any]) -> str:
	source = row.get("source")
	if source is not None:
		if row.get("name") is not None:
			return str(row["name"])
		source = str(source)
		if ":" in source and not os.path.exists(source):
			return source.replace(":", "_").replace(",", "_")
		return os.path.splitext(os.path.basename(source))[0]
	prefix = row.get("name") or row["family"]
	values = "_".join(f"{key}={value}" for key, value in params.items())
	return f"{prefix}_{values}" if values else prefix


def expand_manifest(manifest: Dict) -> List[BenchRun]:
	"""
	Expand manifest rows into single runs.

	A row names its source either as ``source`` (file or generator string) or as
	``family`` with ``params``. List values in ``params`` and in the run keys
	(method, objective, k, limits, warm_start, target) expand into their
	cartesian product. Top-level ``defaults`` fill keys a row leaves out. An
	optional ``name`` replaces the family or file name at the start of the
	instance id.

	:param manifest: The loaded manifest.
	:return: The runs, in manifest order.
	"""
	if "runs" not in manifest:
		raise KeyError("bench manifest must have a 'runs' list.")
	defaults = manifest.get("defaults", {}) or {}
	runs = []
	for raw in manifest["runs"]:
		row = {**defaults, **raw}
		if (row.get("source") is None) == (row.get("family") is None):
			raise ValueError(f"manifest row needs exactly one of source or family: {raw}")
		if "target" not in row:
			raise ValueError(f"manifest row has no target: {raw}")
		params = (row.get("params") or {}) if row.get("family") is not None else {}
		grid = {f"params.{key}": value for key, value in params.items()}
		grid.update({key: row[key] for key in RUN_KEYS if key in row})
		for combo in make_combinations(grid):
			combo_params = {
				key.split(".", 1)[1]: value
				for key, value in combo.items()
				if key.startswith("params.")
			}
			settings = {key: combo[key] for key in RUN_KEYS if key in combo}
			settings["objective"] = str(settings.get("objective", "min_size")).replace(
				"-", "_"
			)
			runs.append(
				BenchRun(
					instance_id=_instance_id(row, combo_params),
					source=row.get("source"),
					family=row.get("family"),
					params=combo_params,
					**settings,
				)
			)
	return runs


def run_single(run: BenchRun) -> Dict[str, Any]:
	"""Run one manifest entry. Failures are reported in the ``error`` column."""
	record = {column: None for column in CSV_COLUMNS}
	record.update(
		instance_id=run.instance_id, method=run.method, objective=run.objective
	)
	try:
		if run.source is not None:
			source, _ = resolve_graph(run.source)
		else:
			source, _ = generate(run.family, build_spec(run.family, **run.params))
		target, _ = resolve_graph(run.target)
		problem = EmbedProblem(
			target,
			source,
			k=run.k,
			objective=run.objective,
			limits=SolveLimits(run.time_limit, run.node_limit),
			warm_start=run.warm_start,
		)
		result, elapsed = measure_speed(get_support_methods(run.method), problem)
	except Exception as e:
		logger.warning(f"bench run {run.instance_id} ({run.method}) failed: {e}")
		record.update(status="error", error=f"{type(e).__name__}: {e}")
		return record

	gap = result.gap
	record.update(
		status=result.status,
		size=result.size,
		bound=result.best_bound,
		gap=None if gap is None else round(gap, 6),
		time=round(elapsed, 3),
		iterations=result.iterations,
		cuts=result.cuts,
	)
	return record


def run_bench(manifest_path: str, jobs: int = 1) -> pd.DataFrame:
	"""
	Run every entry of a YAML manifest.

	:param manifest_path: The manifest path.
	:param jobs: Number of worker processes. Rows keep manifest order either way.
	:return: One row per run with the columns in ``CSV_COLUMNS``.
	"""
	runs = expand_manifest(load_yaml_config(manifest_path))
	logger.info(f"Running {len(runs)} bench entries with {jobs} job(s)")
	if jobs > 1:
		with ProcessPoolExecutor(max_workers=jobs) as pool:
			records = list(tqdm(pool.map(run_single, runs), total=len(runs)))
	else:
		records = [run_single(run) for run in tqdm(runs)]
	return pd.DataFrame(records, columns=CSV_COLUMNS)
