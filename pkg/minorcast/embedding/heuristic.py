import itertools
import logging
import time
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from minorcast.embedding.schema import Embedding, VarCatalog
from minorcast.exceptions import SearchBudgetExceeded
from minorcast.graph import Graph, contract_edge_with_mapping

logger = logging.getLogger("MinorCast")

MAX_EXTRA = 2
MAX_ATTEMPTS = 256
ATTEMPT_BUDGET = 400_000
SEARCH_BUDGET = 2_000_000
SEARCH_TIME = 60.0


def size_lower_bound(X: Graph, Y: Graph) -> int:
	"""
	Lower bound on the size of any embedding of ``Y`` into ``X``.

	Every source vertex needs one target vertex. When all models are single
	vertices the embedding is a subgraph of ``X``, so a bipartite target forces
	at least one larger model for a non-bipartite source.
	"""
	m = Y.num_vertices
	if nx.is_bipartite(X.nx_graph) and not nx.is_bipartite(Y.nx_graph):
		return m + 1
	return m


class BudgetedMatcher(GraphMatcher):
	"""VF2 matcher that gives up after ``budget`` candidate pair checks."""

	def __init__(self, G1: nx.Graph, G2: nx.Graph, budget: int):
		super().__init__(G1, G2)
		self.budget = budget
		self.checks = 0

	def syntactic_feasibility(self, G1_node, G2_node):
		self.checks += 1
		if self.checks > self.budget:
			raise SearchBudgetExceeded(f"gave up after {self.budget} checks")
		return super().syntactic_feasibility(G1_node, G2_node)

	def semantic_feasibility(self, G1_node, G2_node):
		return self.G1.degree(G1_node) >= self.G2.degree(G2_node)


def contract_edges(
	X: Graph, edges: Sequence[Tuple[int, int]]
) -> Optional[Tuple[Graph, Dict[int, List[int]]]]:
	"""
	Contract ``edges`` of ``X`` one after the other.

	:return: The contracted graph and, per contracted vertex, the target vertices
	    merged into it. None when the edges close a cycle.
	"""
	graph, index = X, list(range(X.num_vertices))
	for a, b in edges:
		u, v = index[a], index[b]
		if u == v:
			return None
		graph, mapping = contract_edge_with_mapping(graph, (u, v))
		index = [mapping[w] for w in index]
	groups: Dict[int, List[int]] = {}
	for x, w in enumerate(index):
		groups.setdefault(w, []).append(x)
	return graph, groups


def contraction_search(
	X: Graph,
	Y: Graph,
	cap: int,
	min_extra: int = 0,
	max_extra: int = MAX_EXTRA,
	budget: int = SEARCH_BUDGET,
	time_limit: Optional[float] = SEARCH_TIME,
) -> Optional[Embedding]:
	"""
	Look for an embedding whose vertex models are contracted target edges.

	For ``extra = min_extra, min_extra + 1, ...`` every set of ``extra`` target
	edges is contracted in lexicographic order, and a monomorphism of ``Y`` into
	the contracted target gives an embedding with the merged groups as vertex
	models, of size at most ``m + extra``.

	:param cap: Largest allowed vertex model.
	:param budget: Candidate pair checks over all matcher runs.
	:param time_limit: Seconds to spend in total. None means no limit.
	:return: The first embedding found, or None.
	"""
	start = time.perf_counter()
	pattern = Y.nx_graph
	spent, attempts = 0, 0
	for extra in range(min_extra, min(max_extra, cap - 1) + 1):
		for edges in itertools.combinations(X.sorted_edges(), extra):
			if attempts >= MAX_ATTEMPTS or spent >= budget:
				return None
			if time_limit is not None and time.perf_counter() - start >= time_limit:
				return None
			contracted = contract_edges(X, edges)
			if contracted is None:
				continue
			graph, groups = contracted
			if graph.num_vertices < Y.num_vertices:
				continue
			attempts += 1
			matcher = BudgetedMatcher(
				graph.nx_graph, pattern, min(ATTEMPT_BUDGET, budget - spent)
			)
			try:
				mapping = next(matcher.subgraph_monomorphisms_iter(), None)
			except SearchBudgetExceeded:
				mapping = None
			spent += matcher.checks
			if mapping is None:
				continue
			logger.debug(
				f"contraction search: found after {attempts} attempts, {spent} checks"
			)
			return Embedding.from_models({y: groups[w] for w, y in mapping.items()})
	logger.debug(f"contraction search: nothing after {attempts} attempts")
	return None


def lift_assignment(
	cat: VarCatalog, num_variables: int, embedding: Embedding
) -> List[int]:
	"""
	Write an embedding as a full assignment of a model built with ``cat``.

	``gamma`` is set when the path interior lies in the model, ``delta`` when
	the target edge joins the two models in its orientation, one ``z`` per source
	edge on its first carrying target edge, and ``w`` for models with two or more
	vertices.
	"""
	owner = embedding.inverse()
	assignment = [0] * num_variables
	for (x, y), var in cat.alpha.items():
		if owner.get(x) == y:
			assignment[var] = 1
	for (path, y), var in cat.gamma.items():
		if all(owner.get(x) == y for x in path.interior):
			assignment[var] = 1
	for ((i1, i2), (j1, j2)), var in cat.delta_par.items():
		if owner.get(i1) == j1 and owner.get(i2) == j2:
			assignment[var] = 1
	for ((i1, i2), (j1, j2)), var in cat.delta_perp.items():
		if owner.get(i1) == j2 and owner.get(i2) == j1:
			assignment[var] = 1
	carried = set()
	for ((i1, i2), (j1, j2), orientation), var in sorted(cat.z.items()):
		a, b = (j1, j2) if orientation == "par" else (j2, j1)
		if (j1, j2) not in carried and owner.get(i1) == a and owner.get(i2) == b:
			assignment[var] = 1
			carried.add((j1, j2))
	for y, var in cat.w.items():
		if len(embedding.vertex_models.get(y, ())) > 1:
			assignment[var] = 1
	return assignment


def initial_embedding(
	X: Graph, Y: Graph, cap: int, time_limit: Optional[float] = None
) -> Optional[Embedding]:
	"""
	Warm start for the model-based methods, starting at the smallest size the
	lower bound allows.
	"""
	seconds = SEARCH_TIME if time_limit is None else min(SEARCH_TIME, time_limit / 4)
	extra = size_lower_bound(X, Y) - Y.num_vertices
	return contraction_search(X, Y, cap, min_extra=extra, time_limit=seconds)
