import logging
import time
from typing import Sequence, Tuple

from minorcast.embedding.heuristic import (
	initial_embedding,
	lift_assignment,
	size_lower_bound,
)
from minorcast.embedding.objective import apply_objective
from minorcast.embedding.schema import EmbedProblem, EmbedResult, Embedding, VarCatalog
from minorcast.embedding.verify import verify_embedding
from minorcast.exceptions import EmbeddingConsistencyError
from minorcast.graph import Graph, distances_within, enumerate_paths
from minorcast.milp import Model, solve

logger = logging.getLogger("MinorCast")

DEFAULT_K = 3


def add_alpha_block(model: Model, catalog: VarCatalog, X: Graph, Y: Graph, k: int):
	"""
	Declare ``alpha_i_j`` (target ``i`` represents source ``j``) with
	well-definedness per target vertex and fiber size bounds per source vertex.
	The alphas lead the branching.
	"""
	n, m = X.num_vertices, Y.num_vertices
	for i in range(n):
		for j in range(m):
			catalog.alpha[i, j] = model.add_variable(f"alpha_{i}_{j}", priority=1)
	for i in range(n):
		model.add(
			[(1, catalog.alpha[i, j]) for j in range(m)], upper=1, tag="well_defined"
		)
	for j in range(m):
		model.add(
			[(1, catalog.alpha[i, j]) for i in range(n)], 1, k, tag="fiber_size"
		)


def _add_fiber_conditions(
	model: Model,
	catalog: VarCatalog,
	X: Graph,
	m: int,
	k: int,
	strict_uniqueness: bool,
):
	alpha = catalog.alpha
	reach = distances_within(X, k - 1)
	for i1 in range(X.num_vertices):
		for i2 in range(i1 + 1, X.num_vertices):
			distance = reach[i1].get(i2)
			if distance == 1:
				continue
			if distance is None:
				for j in range(m):
					model.add(
						[(1, alpha[i1, j]), (1, alpha[i2, j])],
						upper=1,
						tag="distance_exclusion",
					)
				continue

			paths = enumerate_paths(X, i1, i2, k)
			for j in range(m):
				gammas = []
				for t, path in enumerate(paths):
					gamma = model.add_variable(f"gamma_{i1}_{i2}_p{t}_{j}")
					catalog.gamma[path, j] = gamma
					gammas.append(gamma)
					for inner in path.interior:
						model.add(
							[(1, gamma), (-1, alpha[inner, j])], upper=0, tag="gamma_upper"
						)
					model.add(
						[(1, gamma)] + [(-1, alpha[inner, j]) for inner in path.interior],
						lower=1 - len(path.interior),
						tag="gamma_lower",
					)
				ends = [(1, alpha[i1, j]), (1, alpha[i2, j])]
				model.add(ends + [(1, g) for g in gammas], upper=3, tag="fiber_condition")
				model.add(ends + [(-1, g) for g in gammas], upper=1, tag="active_fiber")
				if strict_uniqueness:
					model.add([(1, g) for g in gammas], upper=1, tag="unique_fiber")


def _add_pullback(model: Model, catalog: VarCatalog, X: Graph, Y: Graph):
	alpha = catalog.alpha
	for j1, j2 in Y.sorted_edges():
		lifted = []
		for i1, i2 in X.sorted_edges():
			par = model.add_variable(f"dpar_{i1}_{i2}_{j1}_{j2}")
			perp = model.add_variable(f"dperp_{i1}_{i2}_{j1}_{j2}")
			catalog.delta_par[(i1, i2), (j1, j2)] = par
			catalog.delta_perp[(i1, i2), (j1, j2)] = perp
			for delta, a, b, tag in (
				(par, alpha[i1, j1], alpha[i2, j2], "delta_par"),
				(perp, alpha[i1, j2], alpha[i2, j1], "delta_perp"),
			):
				model.add([(1, delta), (-1, a)], upper=0, tag=tag)
				model.add([(1, delta), (-1, b)], upper=0, tag=tag)
				model.add([(1, delta), (-1, a), (-1, b)], lower=-1, tag=tag)
			model.add([(1, par), (1, perp)], upper=1, tag="delta_exclusion")
			lifted += [(1, par), (1, perp)]
		model.add(lifted, lower=1, tag="pullback")


def build_monolithic(p: EmbedProblem) -> Tuple[Model, VarCatalog]:
	"""
	Build the monolithic 0-1 program of an embedding problem.

	Pairs of target vertices farther apart than ``k - 1`` edges never share a
	fiber. Every other non-adjacent pair that shares a fiber needs one of its
	connecting paths of at most ``k`` vertices to run inside that fiber, which
	is tracked by one ``gamma`` per (path, source vertex). Each source edge is
	lifted to a target edge by ``delta`` products in either orientation.

	:param p: The problem. ``p.k`` defaults to 3.
	:return: The model and the catalog of its variables.
	"""
	X, Y = p.target, p.source
	k = p.k or DEFAULT_K
	model = Model(f"monolithic_n{X.num_vertices}_m{Y.num_vertices}_k{k}")
	catalog = VarCatalog()

	add_alpha_block(model, catalog, X, Y, k)
	model.add(
		[(1, var) for _, var in sorted(catalog.alpha.items())],
		Y.num_vertices,
		X.num_vertices,
		tag="total_size",
	)
	_add_fiber_conditions(model, catalog, X, Y.num_vertices, k, p.strict_uniqueness)
	_add_pullback(model, catalog, X, Y)
	apply_objective(p.objective, model, catalog)

	logger.info(
		f"Built {model.name}: {model.num_variables} variables, "
		f"{len(model.constraints)} constraints"
	)
	return model, catalog


def decode(
	cat: VarCatalog, assignment: Sequence[int], source: Graph, target: Graph
) -> Embedding:
	"""
	Read the vertex models off the alpha variables and verify them
	independently before returning.
	"""
	embedding = Embedding.from_models(cat.candidate_models(assignment, source.num_vertices))
	report = verify_embedding(embedding, target, source)
	if not report.valid:
		raise EmbeddingConsistencyError(
			f"decoded embedding is invalid: {report.violations}"
		)
	return embedding


def solve_monolithic(p: EmbedProblem) -> EmbedResult:
	k = p.k or DEFAULT_K
	if p.trivially_infeasible:
		logger.info(f"source has {p.m} vertices, target only {p.n}")
		return EmbedResult(
			"monolithic", "infeasible", p.objective, k, reason="trivially infeasible"
		)

	start = time.perf_counter()
	model, catalog = build_monolithic(p)
	lower = size_lower_bound(p.target, p.source)
	if p.warm_start:
		found = initial_embedding(p.target, p.source, k, p.limits.time_limit)
		if found is not None:
			model.warm_start = lift_assignment(catalog, model.num_variables, found)
	outcome = solve(
		model,
		p.limits.remaining(time.perf_counter() - start),
		known_bound=lower if p.objective == "min_size" else None,
	)
	outcome.stats.wall_time = time.perf_counter() - start

	if outcome.status == "infeasible":
		return EmbedResult(
			"monolithic",
			"infeasible",
			p.objective,
			k,
			stats=outcome.stats,
			reason=f"no embedding with fiber size at most {k}",
		)

	embedding = None
	if outcome.has_solution:
		embedding = decode(catalog, outcome.assignment, p.source, p.target)
	best_bound = p.m
	if p.objective == "min_size":
		best_bound = outcome.best_bound
		if best_bound is not None:
			best_bound = max(best_bound, lower)
	return EmbedResult(
		"monolithic",
		outcome.status,
		p.objective,
		k,
		embedding=embedding,
		best_bound=best_bound,
		stats=outcome.stats,
		reason="limit reached" if outcome.status == "timeout" else None,
	)
