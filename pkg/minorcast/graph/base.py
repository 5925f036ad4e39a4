from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from minorcast.exceptions import DuplicateEdgeError, InvalidVertexError, SelfLoopError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
	"""
	Simple undirected graph on the dense vertex ids ``0..num_vertices-1``.
	Edges are stored as ``(u, v)`` pairs with ``u < v``.
	Both the hardware target and the logical source are Graphs.

	Labels are a reporting side map only.
	Nothing in the models or the solvers reads them.
	"""

	num_vertices: int
	edges: FrozenSet[Edge]
	labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

	def __post_init__(self):
		if self.num_vertices < 0:
			raise ValueError(f"num_vertices must be nonnegative, got {self.num_vertices}")
		for u, v in self.edges:
			if u == v:
				raise SelfLoopError(f"self-loop on vertex {u}")
			if not (0 <= u < v < self.num_vertices):
				raise InvalidVertexError(
					f"edge ({u}, {v}) is not normalized or out of range for "
					f"{self.num_vertices} vertices"
				)
		if self.labels is not None and len(self.labels) != self.num_vertices:
			raise ValueError("labels must have one entry per vertex.")

	@classmethod
	def from_edges(
		cls,
		num_vertices: int,
		edges: Iterable[Edge],
		labels: Optional[Iterable[str]] = None,
	) -> "Graph":
		"""
		Build a graph from unordered pairs.

		:param num_vertices: The number of vertices.
		:param edges: Pairs of vertex ids, in any orientation.
		:param labels: Optional label per vertex.
		:return: The graph. Self-loops and duplicated edges raise.
		"""
		normalized = set()
		for u, v in edges:
			u, v = int(u), int(v)
			if u == v:
				raise SelfLoopError(f"self-loop on vertex {u}")
			edge = (min(u, v), max(u, v))
			if edge in normalized:
				raise DuplicateEdgeError(f"duplicate edge {edge}")
			normalized.add(edge)
		return cls(
			num_vertices,
			frozenset(normalized),
			tuple(labels) if labels is not None else None,
		)

	@classmethod
	def from_networkx(cls, g: nx.Graph) -> "Graph":
		"""Compact an arbitrary networkx graph onto sorted dense ids."""
		nodes = sorted(g.nodes)
		index = {node: i for i, node in enumerate(nodes)}
		return cls.from_edges(
			len(nodes),
			((index[u], index[v]) for u, v in g.edges),
			labels=[str(node) for node in nodes],
		)

	@property
	def num_edges(self) -> int:
		return len(self.edges)

	@cached_property
	def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
		neighbors = [[] for _ in range(self.num_vertices)]
		for u, v in self.edges:
			neighbors[u].append(v)
			neighbors[v].append(u)
		return tuple(tuple(sorted(n)) for n in neighbors)

	@cached_property
	def nx_graph(self) -> nx.Graph:
		g = nx.Graph()
		g.add_nodes_from(range(self.num_vertices))
		g.add_edges_from(self.sorted_edges())
		return nx.freeze(g)

	def sorted_edges(self) -> List[Edge]:
		return sorted(self.edges)

	def has_edge(self, u: int, v: int) -> bool:
		return (min(u, v), max(u, v)) in self.edges

	def degree(self, v: int) -> int:
		return len(self.adjacency[v])

	def check_vertex(self, v: int):
		if not isinstance(v, int) or not (0 <= v < self.num_vertices):
			raise InvalidVertexError(
				f"vertex {v} is not in 0..{self.num_vertices - 1}"
			)

	def label(self, v: int) -> str:
		if self.labels is None:
			return str(v)
		return self.labels[v]


@dataclass(frozen=True, order=True)
class Path:
	"""Simple path; ``size`` counts vertices including both endpoints."""

	vertices: Tuple[int, ...]

	@property
	def size(self) -> int:
		return len(self.vertices)

	@property
	def endpoints(self) -> Edge:
		return self.vertices[0], self.vertices[-1]

	@property
	def interior(self) -> Tuple[int, ...]:
		return self.vertices[1:-1]

	def is_valid_in(self, g: Graph) -> bool:
		if len(set(self.vertices)) != len(self.vertices):
			return False
		return all(
			g.has_edge(a, b) for a, b in zip(self.vertices, self.vertices[1:])
		)
