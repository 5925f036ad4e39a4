import itertools
from dataclasses import dataclass, field
from typing import List, Literal

import networkx as nx

from minorcast.embedding.schema import Embedding
from minorcast.exceptions import InvalidVertexError
from minorcast.graph import Graph

ViolationKind = Literal[
	"overlap", "missing-vertex", "disconnected-model", "uncovered-edge"
]


@dataclass(frozen=True)
class Violation:
	kind: ViolationKind
	detail: str


@dataclass
class VerifyReport:
	violations: List[Violation] = field(default_factory=list)

	@property
	def valid(self) -> bool:
		return not self.violations

	def kinds(self) -> List[str]:
		return sorted({v.kind for v in self.violations})


def verify_embedding(emb: Embedding, X: Graph, Y: Graph) -> VerifyReport:
	"""
	Check an embedding against the definition directly on the two graphs.

	:param emb: The embedding to check.
	:param X: The target graph.
	:param Y: The source graph.
	:return: Every violation found. The embedding is valid iff there is none.
	"""
	for y, xs in emb.vertex_models.items():
		if not (0 <= y < Y.num_vertices):
			raise InvalidVertexError(f"source vertex {y} is out of range")
		for x in xs:
			if not (0 <= x < X.num_vertices):
				raise InvalidVertexError(f"target vertex {x} is out of range")

	report = VerifyReport()
	for y in range(Y.num_vertices):
		if not emb.vertex_models.get(y):
			report.violations.append(
				Violation("missing-vertex", f"source vertex {y} has no vertex model")
			)

	owners = {}
	for y, xs in sorted(emb.vertex_models.items()):
		for x in sorted(xs):
			if x in owners:
				report.violations.append(
					Violation(
						"overlap",
						f"target vertex {x} is used by source vertices {owners[x]} and {y}",
					)
				)
			else:
				owners[x] = y

	target = nx.Graph(list(X.edges))
	target.add_nodes_from(range(X.num_vertices))
	for y, xs in sorted(emb.vertex_models.items()):
		if len(xs) > 1 and not nx.is_connected(target.subgraph(xs)):
			report.violations.append(
				Violation(
					"disconnected-model",
					f"vertex model of {y} {sorted(xs)} is not connected",
				)
			)

	for a, b in sorted(Y.edges):
		models_a = emb.vertex_models.get(a, frozenset())
		models_b = emb.vertex_models.get(b, frozenset())
		if not any(
			target.has_edge(u, v) for u, v in itertools.product(models_a, models_b)
		):
			report.violations.append(
				Violation("uncovered-edge", f"source edge ({a}, {b}) has no target edge")
			)
	return report
