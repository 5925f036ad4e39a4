from functools import lru_cache
from typing import List, Tuple

import dwave_networkx as dnx
import networkx as nx

from minorcast.graph import Graph
from minorcast.topology.spec import ChimeraSpec


@lru_cache(maxsize=32)
def chimera_nx(L: int, M: int, N: int) -> nx.Graph:
	return nx.freeze(dnx.chimera_graph(M, N, L))


def chimera_coordinates(L: int, M: int, N: int) -> dnx.chimera_coordinates:
	return dnx.chimera_coordinates(M, N, L)


def gen_chimera(spec: ChimeraSpec) -> Graph:
	"""
	C_{L,M,N}: an M x N grid of K_{L,L} cells.
	Vertex ``((i * N + j) * 2 + u) * L + k`` is index ``k`` of side ``u`` in cell ``(i, j)``,
	which is the dwave_networkx linear numbering.
	"""
	g = chimera_nx(spec.L, spec.M, spec.N)
	coords = chimera_coordinates(spec.L, spec.M, spec.N)
	labels = [str(coords.linear_to_chimera(q)) for q in range(g.number_of_nodes())]
	return Graph.from_edges(g.number_of_nodes(), g.edges, labels)


def expected_chimera_counts(spec: ChimeraSpec) -> Tuple[int, int]:
	L, M, N = spec.L, spec.M, spec.N
	vertices = 2 * L * M * N
	edges = L * L * M * N + L * (M * (N - 1) + (M - 1) * N)
	return vertices, edges


def cell_qubits(spec: ChimeraSpec, i: int, j: int, u: int) -> List[int]:
	coords = chimera_coordinates(spec.L, spec.M, spec.N)
	return [coords.chimera_to_linear((i, j, u, k)) for k in range(spec.L)]


def cross_couplers(
	spec: ChimeraSpec, cell_a: Tuple[int, int], cell_b: Tuple[int, int]
) -> List[Tuple[int, int]]:
	"""
	Couplers between two cells, as ``(qubit in cell_a, qubit in cell_b)`` sorted.
	"""
	g = chimera_nx(spec.L, spec.M, spec.N)
	coords = chimera_coordinates(spec.L, spec.M, spec.N)
	result = []
	for a, b in g.edges:
		ca, cb = coords.linear_to_chimera(a)[:2], coords.linear_to_chimera(b)[:2]
		if (ca, cb) == (cell_a, cell_b):
			result.append((a, b))
		elif (cb, ca) == (cell_a, cell_b):
			result.append((b, a))
	return sorted(result)
