import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from minorcast.exceptions import GeneratorRetryError
from minorcast.graph import Graph, contract_edge_with_mapping
from minorcast.topology.chimera import cell_qubits, chimera_coordinates, cross_couplers
from minorcast.topology.spec import ChimeraSpec, StructuredSpec

logger = logging.getLogger("MinorCast")

Pair = Tuple[int, int]


@dataclass
class StructuredInstance:
	"""
	A source graph cut out of a Chimera target.
	``witness`` maps each source vertex to the target qubits merged into it,
	so it is a valid embedding of ``graph`` into ``target``.
	"""

	graph: Graph
	target: ChimeraSpec
	witness: Dict[int, Tuple[int, ...]]
	contracted: List[Pair] = field(default_factory=list)
	attachments: List[Pair] = field(default_factory=list)
	forced_attachments: int = 0
	attempts: int = 1

	def metadata(self) -> Dict:
		return {
			"target": self.target.model_dump(),
			"contracted": [list(e) for e in self.contracted],
			"attachments": [list(e) for e in self.attachments],
			"forced_attachments": self.forced_attachments,
			"attempts": self.attempts,
			"witness": {str(v): list(q) for v, q in sorted(self.witness.items())},
		}


@dataclass
class _Row:
	edges: List[Pair]
	contracted: List[Pair]
	attachments: List[Pair]
	forced: int


def _biclique(spec: ChimeraSpec, i: int, j: int) -> List[Pair]:
	return [
		(a, b)
		for a in cell_qubits(spec, i, j, 0)
		for b in cell_qubits(spec, i, j, 1)
	]


def _sample_row(
	rng: np.random.Generator, target: ChimeraSpec, row: int, spec: StructuredSpec
) -> Optional[_Row]:
	candidates = _biclique(target, row, 1)
	draws = rng.random(len(candidates))
	chosen = [pair for pair, draw in zip(candidates, draws) if draw < spec.p_inter]
	if len(chosen) < spec.zeta:
		return None

	contracted, used = [], set()
	for idx in rng.permutation(len(chosen)):
		if len(contracted) == spec.zeta:
			break
		a, b = chosen[idx]
		if a in used or b in used:
			continue
		contracted.append((a, b))
		used.update((a, b))
	if len(contracted) < spec.zeta:
		return None

	block = nx.Graph(chosen)
	couplers = cross_couplers(target, (row, 0), (row, 1))
	draws = rng.random(len(couplers))
	attachments = [
		pair
		for pair, draw in zip(couplers, draws)
		if draw < spec.p_intra and pair[1] in block
	]
	forced = 0
	attached = {b for _, b in attachments}
	for component in sorted(nx.connected_components(block), key=min):
		if attached & component:
			continue
		pair = next(p for p in couplers if p[1] in component)
		attachments.append(pair)
		forced += 1
	return _Row(_biclique(target, row, 0) + chosen, contracted, attachments, forced)


def assemble_instance(
	target: ChimeraSpec,
	edges: List[Pair],
	contracted: List[Pair],
	attachments: List[Pair],
	forced: int = 0,
	attempts: int = 1,
) -> StructuredInstance:
	"""
	Keep the qubits touched by ``edges + attachments``, compact them in increasing
	qubit order, then contract the ``contracted`` qubit pairs one by one.
	"""
	all_edges = sorted(set(edges) | set(attachments))
	qubits = sorted({q for e in all_edges for q in e})
	index = {q: i for i, q in enumerate(qubits)}
	graph = Graph.from_edges(
		len(qubits),
		((index[a], index[b]) for a, b in all_edges),
		labels=[str(q) for q in qubits],
	)
	groups = {i: [q] for i, q in enumerate(qubits)}
	for a, b in contracted:
		graph, mapping = contract_edge_with_mapping(graph, (index[a], index[b]))
		merged: Dict[int, List[int]] = {}
		for old, members in groups.items():
			merged.setdefault(mapping[old], []).extend(members)
		groups = merged
		index = {q: mapping[v] for q, v in index.items()}
	witness = {v: tuple(sorted(members)) for v, members in groups.items()}
	return StructuredInstance(
		graph=graph,
		target=target,
		witness=witness,
		contracted=list(contracted),
		attachments=sorted(attachments),
		forced_attachments=forced,
		attempts=attempts,
	)


def gen_structured_instance(spec: StructuredSpec) -> StructuredInstance:
	"""
	Sample a structured source graph together with its witness embedding.

	Each row pairs a complete K_4,4 cell with a K_4,4(p_inter) cell.
	``zeta`` pairwise-disjoint sampled edges of the random cell are contracted,
	and the random cell is attached through the row's 4 horizontal couplers,
	each kept with probability p_intra.
	Random-cell qubits without sampled edges are dropped,
	and every component of the random cell gets at least one attachment.
	With ``cells=4`` a second row is built below the first and the vertical
	couplers between used qubits are kept with probability p_intra.

	:param spec: The structured spec.
	:return: The instance.
	"""
	rows = 1 if spec.cells == 2 else 2
	target = ChimeraSpec(L=4, M=rows, N=2)
	rng = np.random.default_rng(spec.seed)

	for attempt in range(1, spec.max_retries + 1):
		sampled = [_sample_row(rng, target, row, spec) for row in range(rows)]
		if any(r is None for r in sampled):
			logger.debug(f"structured sample {attempt} rejected, resampling")
			continue
		edges = [e for r in sampled for e in r.edges]
		contracted = [e for r in sampled for e in r.contracted]
		attachments = [e for r in sampled for e in r.attachments]
		forced = sum(r.forced for r in sampled)
		if rows == 2:
			used = {q for e in edges for q in e}
			vertical = [
				pair
				for column in range(2)
				for pair in cross_couplers(target, (0, column), (1, column))
			]
			draws = rng.random(len(vertical))
			kept = [
				pair
				for pair, draw in zip(vertical, draws)
				if draw < spec.p_intra and pair[0] in used and pair[1] in used
			]
			if not kept:
				kept = [vertical[0]]
				forced += 1
			attachments.extend(kept)
		return assemble_instance(target, edges, contracted, attachments, forced, attempt)

	raise GeneratorRetryError(
		f"Could not sample {spec.zeta} disjoint edges with p_inter={spec.p_inter} "
		f"after {spec.max_retries} attempts."
	)


def gen_structured(spec: StructuredSpec) -> Graph:
	return gen_structured_instance(spec).graph


def illustrative_example() -> StructuredInstance:
	"""
	The 12-vertex example: a complete K_4,4 bridged by one coupler to a
	4-vertex block (K_4 minus an edge) made by contracting one edge of a K_3,2.
	Its minimum embedding into C_4,1,2 has 13 qubits, given as the witness.
	"""
	target = ChimeraSpec(L=4, M=1, N=2)
	couplers = cross_couplers(target, (0, 0), (0, 1))
	coords = chimera_coordinates(target.L, target.M, target.N)
	side = coords.linear_to_chimera(couplers[0][1])[2]
	wide = cell_qubits(target, 0, 1, side)[:3]
	narrow = cell_qubits(target, 0, 1, 1 - side)[:2]
	block = [(min(a, b), max(a, b)) for a in wide for b in narrow]
	contracted = [(min(wide[0], narrow[0]), max(wide[0], narrow[0]))]
	bridge = next(pair for pair in couplers if pair[1] == wide[1])
	return assemble_instance(
		target, _biclique(target, 0, 0) + block, contracted, [bridge]
	)
