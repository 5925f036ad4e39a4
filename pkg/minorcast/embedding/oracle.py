import logging
import math
import time
from dataclasses import dataclass
from typing import Iterator, List, Optional

from minorcast.embedding.schema import EmbedProblem, EmbedResult, Embedding
from minorcast.embedding.verify import verify_embedding
from minorcast.exceptions import EmbeddingConsistencyError, OracleCapError
from minorcast.graph import Graph
from minorcast.milp import SolveStats

logger = logging.getLogger("MinorCast")

DEFAULT_VERTEX_CAP = 10


@dataclass
class OracleResult:
	feasible: bool
	size: Optional[int] = None
	embedding: Optional[Embedding] = None
	nodes: int = 0


def _bits(mask: int) -> Iterator[int]:
	while mask:
		low = mask & -mask
		yield low.bit_length() - 1
		mask ^= low


class _PiSearch:
	"""
	DFS over target-to-source maps. Target vertex ``i`` takes value 0 (unused)
	or ``j + 1`` (represents source vertex ``j``), values tried in increasing
	order, so leaves come out in lexicographic order of that vector.
	Vertex models are kept as bitmasks.
	"""

	def __init__(self, X: Graph, Y: Graph, size_cap: Optional[int]):
		self.n, self.m = X.num_vertices, Y.num_vertices
		self.nbr = [sum(1 << v for v in X.adjacency[u]) for u in range(self.n)]
		self.source_edges = sorted(Y.edges)
		self.size_cap = math.inf if size_cap is None else size_cap
		self.best = math.inf
		self.fibers = [0] * self.m
		self.pi = [0] * self.n
		self.nodes = 0

	def _reach(self, start: int, allowed: int) -> int:
		seen = start
		frontier = start
		while frontier:
			grown = 0
			for u in _bits(frontier):
				grown |= self.nbr[u]
			frontier = grown & allowed & ~seen
			seen |= frontier
		return seen

	def _still_possible(self, free: int) -> bool:
		for fiber in self.fibers:
			if fiber and fiber & (fiber - 1):
				start = fiber & -fiber
				if fiber & ~self._reach(start, fiber | free):
					return False
		for a, b in self.source_edges:
			side_a, side_b = self.fibers[a] | free, self.fibers[b] | free
			if not any(self.nbr[u] & side_b for u in _bits(side_a)):
				return False
		return True

	def _is_embedding(self) -> bool:
		for fiber in self.fibers:
			if not fiber:
				return False
			if fiber & ~self._reach(fiber & -fiber, fiber):
				return False
		for a, b in self.source_edges:
			if not any(self.nbr[u] & self.fibers[b] for u in _bits(self.fibers[a])):
				return False
		return True

	def search(self, i: int = 0, size: int = 0) -> Iterator[List[int]]:
		self.nodes += 1
		missing = sum(1 for fiber in self.fibers if not fiber)
		if missing > self.n - i:
			return
		if size + missing >= self.best or size + missing > self.size_cap:
			return
		if i == self.n:
			if self._is_embedding():
				yield list(self.pi)
			return
		free = ((1 << self.n) - 1) & ~((1 << i) - 1)
		if not self._still_possible(free):
			return
		yield from self.search(i + 1, size)
		bit = 1 << i
		for j in range(self.m):
			self.pi[i] = j + 1
			self.fibers[j] |= bit
			yield from self.search(i + 1, size + 1)
			self.fibers[j] &= ~bit
		self.pi[i] = 0


def _check_cap(X: Graph, vertex_cap: int):
	if X.num_vertices > vertex_cap:
		raise OracleCapError(
			f"oracle refuses targets above {vertex_cap} vertices, "
			f"got {X.num_vertices}"
		)


def _to_embedding(pi: List[int], m: int) -> Embedding:
	return Embedding.from_assignment([v - 1 for v in pi], m)


def oracle_min_embedding(
	X: Graph,
	Y: Graph,
	size_cap: Optional[int] = None,
	vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> OracleResult:
	"""
	Exhaustive minimum-size embedding search for tiny targets.

	Ties between minimum embeddings go to the lexicographically smallest
	target-to-source vector (0 for unused, ``j + 1`` for source ``j``).

	:param X: The target graph, at most ``vertex_cap`` vertices.
	:param Y: The source graph.
	:param size_cap: Only look for embeddings of at most this size.
	:param vertex_cap: Refuse larger targets instead of running for too long.
	:return: The minimum size and a verified witness, or infeasible.
	"""
	_check_cap(X, vertex_cap)
	search = _PiSearch(X, Y, size_cap)
	witness = None
	for pi in search.search():
		witness = list(pi)
		search.best = sum(1 for v in pi if v)
	if witness is None:
		return OracleResult(False, nodes=search.nodes)
	embedding = _to_embedding(witness, Y.num_vertices)
	report = verify_embedding(embedding, X, Y)
	if not report.valid:
		raise EmbeddingConsistencyError(
			f"oracle witness failed verification: {report.violations}"
		)
	return OracleResult(True, embedding.size, embedding, search.nodes)


def enumerate_embeddings(
	X: Graph,
	Y: Graph,
	size_cap: Optional[int] = None,
	vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> Iterator[Embedding]:
	"""Yield every valid embedding of Y into X, in the oracle's search order."""
	_check_cap(X, vertex_cap)
	search = _PiSearch(X, Y, size_cap)
	for pi in search.search():
		yield _to_embedding(pi, Y.num_vertices)


def solve_oracle(problem: EmbedProblem) -> EmbedResult:
	"""
	Oracle as an embedding method. Fiber sizes are not capped,
	and the result is always the minimum whatever the objective.
	"""
	start = time.perf_counter()
	if problem.trivially_infeasible:
		return EmbedResult(
			"oracle", "infeasible", problem.objective, None, reason="trivially infeasible"
		)
	result = oracle_min_embedding(problem.target, problem.source)
	stats = SolveStats(nodes=result.nodes, wall_time=time.perf_counter() - start)
	if not result.feasible:
		return EmbedResult(
			"oracle",
			"infeasible",
			problem.objective,
			None,
			stats=stats,
			reason="no embedding exists",
		)
	return EmbedResult(
		"oracle",
		"optimal",
		problem.objective,
		None,
		embedding=result.embedding,
		best_bound=result.size,
		stats=stats,
	)
