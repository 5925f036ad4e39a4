import itertools

from minorcast.graph import Graph
from minorcast.topology.chimera import chimera_coordinates, chimera_nx
from minorcast.topology.spec import PegasusSpec

# Same-side index pairs joined inside every cell.
ODD_PAIRS = ((0, 1), (2, 3))


def gen_pegasus(spec: PegasusSpec) -> Graph:
	"""
	Layered stand-in for P_{4,M,N,3}.

	Every layer is a C_{4,M,N} numbered with an offset of ``layer * 32MN``.
	Each cell gets four extra edges, one per same-side pair in ``ODD_PAIRS``.
	Between consecutive layers, qubit ``(i, j, u, k)`` couples to
	``(i, j, 1 - u, k)`` of the layer above.
	Vendor adjacency should be supplied as a graph file instead.

	:param spec: The Pegasus spec.
	:return: A graph with ``2 * L * M * N * O`` vertices.
	"""
	layer = chimera_nx(spec.L, spec.M, spec.N)
	coords = chimera_coordinates(spec.L, spec.M, spec.N)
	layer_size = layer.number_of_nodes()

	layer_edges = set(layer.edges)
	for i, j, u in itertools.product(range(spec.M), range(spec.N), (0, 1)):
		for a, b in ODD_PAIRS:
			layer_edges.add(
				(
					coords.chimera_to_linear((i, j, u, a)),
					coords.chimera_to_linear((i, j, u, b)),
				)
			)

	edges = []
	labels = []
	for level in range(spec.O):
		offset = level * layer_size
		edges.extend((a + offset, b + offset) for a, b in layer_edges)
		labels.extend(
			str((level,) + tuple(coords.linear_to_chimera(q)))
			for q in range(layer_size)
		)
		if level + 1 == spec.O:
			continue
		for q in range(layer_size):
			i, j, u, k = coords.linear_to_chimera(q)
			partner = coords.chimera_to_linear((i, j, 1 - u, k))
			edges.append((offset + q, offset + layer_size + partner))
	return Graph.from_edges(layer_size * spec.O, edges, labels)
