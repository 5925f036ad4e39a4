from .base import Graph, Path
from .io import load_graph, read_graph_file, save_graph, write_graph_file
from .metric import (
	contract_edge,
	contract_edge_with_mapping,
	distances_within,
	enumerate_paths,
	is_connected_subset,
	shortest_distance,
)
