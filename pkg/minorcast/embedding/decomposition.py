import logging
import time
from dataclasses import dataclass, field
from typing import Collection, Dict, FrozenSet, List, Optional, Set, Tuple

from minorcast.embedding.heuristic import (
	initial_embedding,
	lift_assignment,
	size_lower_bound,
)
from minorcast.embedding.monolithic import add_alpha_block, decode
from minorcast.embedding.objective import apply_objective
from minorcast.embedding.schema import (
	EmbedProblem,
	EmbedResult,
	Embedding,
	IterationRecord,
	VarCatalog,
)
from minorcast.exceptions import CutSoundnessError
from minorcast.graph import Graph, is_connected_subset
from minorcast.milp import LinearConstraint, Model, SolveStats, solve

logger = logging.getLogger("MinorCast")

ORIENTATIONS = ("par", "perp")


@dataclass
class MasterState:
	model: Model
	catalog: VarCatalog
	fiber_cap: int
	cuts_added: List[LinearConstraint] = field(default_factory=list)
	iteration: int = 0
	incumbent: Optional[Embedding] = None
	best_bound: Optional[int] = None
	trace: List[IterationRecord] = field(default_factory=list)
	seen: Set[Tuple[int, ...]] = field(default_factory=set)


@dataclass(frozen=True)
class DisconnectedModel:
	vertex: int
	model: FrozenSet[int]
	boundary: FrozenSet[int]


@dataclass
class ConnectivityReport:
	disconnected: List[DisconnectedModel] = field(default_factory=list)

	@property
	def is_connected(self) -> bool:
		return not self.disconnected


def build_master(p: EmbedProblem) -> MasterState:
	"""
	Build the assignment master problem.

	Each source edge picks exactly one (target edge, orientation) through ``z``,
	and a picked ``z`` pins both endpoints. ``w_j`` is 1 whenever source ``j``
	holds two or more target vertices, and then every vertex of that fiber needs
	a neighbor in the same fiber. Fiber connectivity itself is left to the cuts.

	:param p: The problem. ``p.k`` defaults to the target size (no cap).
	:return: The initial master state.
	"""
	X, Y = p.target, p.source
	n, m = X.num_vertices, Y.num_vertices
	cap = p.k or n
	model = Model(f"master_n{n}_m{m}_k{cap}")
	catalog = VarCatalog()
	add_alpha_block(model, catalog, X, Y, cap)
	alpha = catalog.alpha

	for j1, j2 in Y.sorted_edges():
		chosen = []
		for i1, i2 in X.sorted_edges():
			ends = {
				"par": (alpha[i1, j1], alpha[i2, j2]),
				"perp": (alpha[i1, j2], alpha[i2, j1]),
			}
			for orientation in ORIENTATIONS:
				z = model.add_variable(f"z_{i1}_{i2}_{j1}_{j2}_{orientation}")
				catalog.z[(i1, i2), (j1, j2), orientation] = z
				chosen.append((1, z))
				a, b = ends[orientation]
				model.add([(1, z), (-1, a)], upper=0, tag="link")
				model.add([(1, z), (-1, b)], upper=0, tag="link")
				model.add([(2, z), (-1, a), (-1, b)], upper=0, tag="link_aggregated")
		model.add(chosen, 1, 1, tag="edge_assignment")

	for j in range(m):
		catalog.w[j] = model.add_variable(f"w_{j}")
	for j in range(m):
		model.add(
			[(1, alpha[i, j]) for i in range(n)] + [(-n, catalog.w[j])],
			upper=1,
			tag="multi_vertex",
		)
		for i in range(n):
			model.add(
				[(-n, alpha[i, j])]
				+ [(1, alpha[nb, j]) for nb in X.adjacency[i]]
				+ [(-1, catalog.w[j])],
				lower=-n,
				tag="neighbor_support",
			)

	apply_objective(p.objective, model, catalog)
	logger.info(
		f"Built {model.name}: {model.num_variables} variables, "
		f"{len(model.constraints)} constraints"
	)
	return MasterState(model, catalog, cap)


def check_connectivity(
	emb_candidate: Dict[int, Collection[int]], X: Graph
) -> ConnectivityReport:
	report = ConnectivityReport()
	for y, xs in sorted(emb_candidate.items()):
		xs = frozenset(xs)
		if len(xs) < 2 or is_connected_subset(X, xs):
			continue
		boundary = frozenset(v for u in xs for v in X.adjacency[u]) - xs
		report.disconnected.append(DisconnectedModel(y, xs, boundary))
	return report


def make_cut(entry: DisconnectedModel, cat: VarCatalog) -> LinearConstraint:
	"""
	No-good cut for a disconnected vertex model:
	``(|model| - sum alpha over model) + sum alpha over boundary >= 1``.
	Any fiber that drops a vertex of the model or adds a boundary vertex
	satisfies it, so no connected fiber is cut off.
	"""
	if not entry.boundary:
		logger.debug(
			f"vertex model of {entry.vertex} has no boundary; "
			"cut only asks to drop a vertex"
		)
	terms = [(-1, cat.alpha[x, entry.vertex]) for x in sorted(entry.model)]
	terms += [(1, cat.alpha[x, entry.vertex]) for x in sorted(entry.boundary)]
	return LinearConstraint.build(terms, lower=1 - len(entry.model), tag="no_good")


def solve_decomposition(p: EmbedProblem) -> EmbedResult:
	"""
	Alternate master solves and connectivity checks until the master solution
	has connected vertex models.

	Each disconnected model of a master solution adds one cut, and the master
	is solved again. With the min-size objective the previous master optimum is
	passed on as a proven bound, starting from the structural size bound. Unless
	``p.warm_start`` is off, the first master solve starts from a contraction
	search embedding. With the feasibility objective the loop stops at the
	first connected master solution.

	:param p: The problem.
	:return: The result, with ``trace`` holding one record per master solve.
	"""
	cap = p.k or p.n
	if p.trivially_infeasible:
		logger.info(f"source has {p.m} vertices, target only {p.n}")
		return EmbedResult(
			"decomposition", "infeasible", p.objective, cap, reason="trivially infeasible"
		)

	start = time.perf_counter()
	state = build_master(p)
	stats = SolveStats()
	feasibility = p.objective == "feasible"
	if not feasibility:
		state.best_bound = size_lower_bound(p.target, p.source)
	if p.warm_start:
		found = initial_embedding(p.target, p.source, cap, p.limits.time_limit)
		if found is not None:
			state.model.warm_start = lift_assignment(
				state.catalog, state.model.num_variables, found
			)

	def result(status: str, **kwargs) -> EmbedResult:
		stats.wall_time = time.perf_counter() - start
		if feasibility:
			kwargs["best_bound"] = p.m
		return EmbedResult(
			"decomposition",
			status,
			p.objective,
			cap,
			stats=stats,
			iterations=state.iteration,
			cuts=len(state.cuts_added),
			cut_rows=list(state.cuts_added),
			trace=state.trace,
			**kwargs,
		)

	while True:
		outcome = solve(
			state.model,
			p.limits.remaining(time.perf_counter() - start),
			known_bound=None if feasibility else state.best_bound,
		)
		state.iteration += 1
		stats.nodes += outcome.stats.nodes
		stats.propagations += outcome.stats.propagations
		stats.incumbents += outcome.stats.incumbents
		if not feasibility and outcome.best_bound is not None:
			state.best_bound = max(state.best_bound or 0, outcome.best_bound)

		def record(cuts: int):
			entry = IterationRecord(
				state.iteration,
				outcome.status,
				outcome.objective_value,
				cuts,
				time.perf_counter() - start,
			)
			state.trace.append(entry)
			logger.info(entry.to_line())

		if outcome.status == "infeasible":
			record(0)
			return result(
				"infeasible",
				reason=f"no embedding with fiber size at most {cap}",
			)
		if not outcome.has_solution:
			record(0)
			return result(
				"timeout", best_bound=state.best_bound, reason="limit reached"
			)

		alpha_vector = state.catalog.alpha_vector(outcome.assignment)
		if alpha_vector in state.seen:
			raise CutSoundnessError(
				f"master repeated an assignment at iteration {state.iteration}"
			)
		state.seen.add(alpha_vector)

		candidate = state.catalog.candidate_models(outcome.assignment, p.m)
		report = check_connectivity(candidate, p.target)
		if report.is_connected:
			record(0)
			state.incumbent = decode(
				state.catalog, outcome.assignment, p.source, p.target
			)
			return result(
				outcome.status,
				embedding=state.incumbent,
				best_bound=state.best_bound,
				reason="limit reached" if outcome.status == "timeout" else None,
			)

		for entry in report.disconnected:
			cut = make_cut(entry, state.catalog)
			if cut.is_satisfied(outcome.assignment):
				raise CutSoundnessError(
					f"cut for source vertex {entry.vertex} does not remove the "
					"master solution it was built from"
				)
			state.model.add_constraint(cut)
			state.cuts_added.append(cut)
		record(len(report.disconnected))

		if outcome.status == "timeout":
			return result(
				"timeout", best_bound=state.best_bound, reason="limit reached"
			)
