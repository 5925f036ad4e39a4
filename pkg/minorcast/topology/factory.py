import logging
import os
from typing import Any, Dict, List, Optional, Tuple

from minorcast.graph import Graph, read_graph_file
from minorcast.support import get_support_generators, get_support_specs
from minorcast.topology.structured import StructuredInstance, illustrative_example

logger = logging.getLogger("MinorCast")


def _parse_value(token: str) -> Any:
	token = token.strip()
	try:
		return int(token)
	except ValueError:
		return float(token)


def build_spec(family: str, values: List[Any] = None, **kwargs):
	"""
	Build a generator spec from positional values in field order and keyword overrides.
	``max_retries`` is keyword-only.
	"""
	spec_cls = get_support_specs(family)
	names = [name for name in spec_cls.model_fields if name != "max_retries"]
	values = values or []
	if len(values) > len(names):
		raise ValueError(
			f"{family} takes at most {len(names)} values ({', '.join(names)}), "
			f"got {len(values)}"
		)
	params = dict(zip(names, values))
	params.update(kwargs)
	return spec_cls(**params)


def generate(family: str, spec) -> Tuple[Graph, Dict]:
	"""
	Run a generator and return the graph with its sidecar metadata.
	"""
	generated = get_support_generators(family)(spec)
	metadata = {"family": family, "spec": spec.model_dump()}
	if isinstance(generated, StructuredInstance):
		metadata.update(generated.metadata())
		generated = generated.graph
	metadata["num_vertices"] = generated.num_vertices
	metadata["num_edges"] = generated.num_edges
	return generated, metadata


def resolve_graph(argument: str, seed: Optional[int] = None) -> Tuple[Graph, Dict]:
	"""
	Resolve a CLI or manifest graph argument.

	Existing paths are read as edge-list files. Otherwise the argument is a
	generator string such as ``chimera:4,1,2``, ``pegasus:4,2,2,3``,
	``er:10,0.5,7``, ``structured:1,0.5,0.5,2,3`` or ``illustrative``.

	:param argument: The path or generator string.
	:param seed: Seed for seeded families whose string leaves the seed out.
	:return: The graph and a metadata dictionary describing where it came from.
	"""
	if os.path.exists(argument):
		return read_graph_file(argument), {"path": argument}
	if argument == "illustrative":
		instance = illustrative_example()
		metadata = {"family": "illustrative", **instance.metadata()}
		return instance.graph, metadata
	if ":" not in argument:
		raise ValueError(f"Graph file {argument} does not exist.")
	family, _, params = argument.partition(":")
	values = [_parse_value(v) for v in params.split(",") if v.strip()]
	names = [name for name in get_support_specs(family).model_fields if name != "max_retries"]
	defaults = {}
	if seed is not None and "seed" in names[len(values) :]:
		defaults["seed"] = seed
	spec = build_spec(family, values, **defaults)
	return generate(family, spec)
