from typing import Collection, Dict, List, Optional, Tuple

import networkx as nx

from minorcast.graph.base import Edge, Graph, Path


def shortest_distance(g: Graph, u: int, v: int) -> Optional[int]:
	"""
	Edge-count distance between ``u`` and ``v``.

	:return: The distance, 0 when ``u == v``, None when unreachable.
	"""
	g.check_vertex(u)
	g.check_vertex(v)
	try:
		return nx.shortest_path_length(g.nx_graph, u, v)
	except nx.NetworkXNoPath:
		return None


def distances_within(g: Graph, cutoff: int) -> Dict[int, Dict[int, int]]:
	"""
	BFS distances from every vertex, truncated at ``cutoff`` edges.
	Pairs missing from the result are farther than ``cutoff`` or unreachable.
	"""
	return {
		source: dict(lengths)
		for source, lengths in nx.all_pairs_shortest_path_length(
			g.nx_graph, cutoff=cutoff
		)
	}


def enumerate_paths(g: Graph, u: int, v: int, k: int) -> List[Path]:
	"""
	All simple ``u``-``v`` paths with at most ``k`` vertices,
	sorted lexicographically by vertex sequence.
	"""
	g.check_vertex(u)
	g.check_vertex(v)
	if u == v:
		raise ValueError("enumerate_paths needs two distinct endpoints.")
	if k < 2:
		raise ValueError(f"k must be at least 2, got {k}")
	paths = nx.all_simple_paths(g.nx_graph, u, v, cutoff=k - 1)
	return sorted(Path(tuple(p)) for p in paths)


def is_connected_subset(g: Graph, s: Collection[int]) -> bool:
	vertices = set(s)
	for v in vertices:
		g.check_vertex(v)
	if len(vertices) <= 1:
		return True
	return nx.is_connected(g.nx_graph.subgraph(vertices))


def contract_edge_with_mapping(g: Graph, e: Edge) -> Tuple[Graph, Dict[int, int]]:
	"""
	Contract ``e`` and compact ids to ``0..n-2``.
	The merged vertex takes the smaller endpoint's id.

	:return: The contracted graph and the old-id to new-id mapping.
	"""
	u, v = min(e), max(e)
	if not g.has_edge(u, v):
		raise ValueError(f"edge ({u}, {v}) is not in the graph.")
	contracted = nx.contracted_nodes(nx.Graph(g.nx_graph), u, v, self_loops=False)
	mapping = {w: (w if w < v else w - 1) for w in range(g.num_vertices) if w != v}
	mapping[v] = u
	labels = None
	if g.labels is not None:
		labels = [g.labels[w] for w in range(g.num_vertices) if w != v]
		labels[u] = f"{g.labels[u]}+{g.labels[v]}"
	edges = {
		(min(mapping[a], mapping[b]), max(mapping[a], mapping[b]))
		for a, b in contracted.edges
	}
	return Graph.from_edges(g.num_vertices - 1, edges, labels), mapping


def contract_edge(g: Graph, e: Edge) -> Graph:
	return contract_edge_with_mapping(g, e)[0]
