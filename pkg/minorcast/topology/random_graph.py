import networkx as nx

from minorcast.graph import Graph
from minorcast.topology.spec import ErdosRenyiSpec


def gen_erdos_renyi(spec: ErdosRenyiSpec) -> Graph:
	g = nx.gnp_random_graph(spec.nu, spec.p, seed=spec.seed)
	return Graph.from_edges(spec.nu, g.edges)
