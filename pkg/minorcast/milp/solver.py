import logging
import math
import time
from dataclasses import dataclass, field
from typing import List, Literal, Optional

from minorcast.milp.model import INF, Model

logger = logging.getLogger("MinorCast")

Status = Literal["optimal", "feasible", "infeasible", "timeout"]


@dataclass
class SolveLimits:
	time_limit: Optional[float] = None
	node_limit: Optional[int] = None

	def remaining(self, elapsed: float) -> "SolveLimits":
		"""Limits left after ``elapsed`` seconds were spent elsewhere."""
		if self.time_limit is None:
			return SolveLimits(None, self.node_limit)
		return SolveLimits(max(0.0, self.time_limit - elapsed), self.node_limit)


@dataclass
class SolveStats:
	nodes: int = 0
	propagations: int = 0
	incumbents: int = 0
	wall_time: float = 0.0


@dataclass
class SolveOutcome:
	"""
	Result of one solve.

	``best_bound`` is a lower bound on the optimum for minimization
	(an upper bound when maximizing). It equals ``objective_value`` when the
	status is optimal, and it is None when the model is infeasible.
	"""

	status: Status
	assignment: Optional[List[int]] = None
	objective_value: Optional[int] = None
	best_bound: Optional[int] = None
	stats: SolveStats = field(default_factory=SolveStats)

	@property
	def has_solution(self) -> bool:
		return self.assignment is not None


class BranchAndBound:
	"""
	Depth-first branch-and-bound over binary variables.

	Every node propagates constraint activities to a fixpoint: a constraint whose
	minimum activity exceeds its upper bound (or maximum activity falls short of
	its lower bound) is a conflict, and a free variable whose value would cause
	that is fixed the other way. The objective is handled as one more row whose
	upper bound drops to ``incumbent - 1`` each time a solution is found.

	The node bound is the minimum objective activity plus, for a greedily picked
	family of variable-disjoint covering rows (unit coefficients, finite lower
	bound), the cheapest way to meet each row's remaining demand. With an
	incumbent, free variables outside that family that would push the bound past
	it are fixed to 0.

	Variables of the highest declared priority lead the branching. Unmet covering
	rows made only of them come first: the row with the fewest free variables,
	and within it the variable in the most tight constraints (lowest id on ties),
	trying 1 first. Once those rows are met, the remaining leading variables go
	most tight first, cheapest value first. Lower priorities are left to
	propagation and are only branched when it stalls, by the same covering-row
	rule and finally by lowest free id.
	"""

	def __init__(
		self,
		model: Model,
		limits: Optional[SolveLimits] = None,
		stop_at_first: Optional[bool] = None,
		known_bound: Optional[int] = None,
	):
		self.model = model
		self.limits = limits or SolveLimits()
		self.stop_at_first = (
			model.objective is None if stop_at_first is None else stop_at_first
		)
		self.known_bound = known_bound
		self.stats = SolveStats()

		n = model.num_variables
		self.n = n
		self.terms = [list(c.terms) for c in model.constraints]
		self.lower = [c.lower for c in model.constraints]
		self.upper = [c.upper for c in model.constraints]

		self.sign = 1
		self.cost = [0] * n
		self.obj_row = None
		if model.objective is not None:
			self.sign = 1 if model.objective.sense == "minimize" else -1
			for coef, var in model.objective.terms:
				self.cost[var] = self.sign * coef
			self.obj_row = len(self.terms)
			self.terms.append([(c, v) for v, c in enumerate(self.cost) if c != 0])
			self.lower.append(-INF)
			self.upper.append(INF)
		self.ecost = [max(c, 0) for c in self.cost]

		num_rows = len(self.terms)
		self.maxabs = [max((abs(a) for a, _ in t), default=0) for t in self.terms]
		self.minact = [sum(a for a, _ in t if a < 0) for t in self.terms]
		self.maxact = [sum(a for a, _ in t if a > 0) for t in self.terms]
		self.nfree = [len(t) for t in self.terms]
		self.occ = [[] for _ in range(n)]
		for c, row in enumerate(self.terms):
			for a, v in row:
				self.occ[v].append((c, a))

		self.branch_rows = [
			c
			for c in range(len(model.constraints))
			if self.terms[c]
			and self.lower[c] > -INF
			and all(a > 0 for a, _ in self.terms[c])
		]
		self.cover_rows = sorted(
			(
				c
				for c in self.branch_rows
				if all(a == 1 for a, _ in self.terms[c])
				and any(self.ecost[v] > 0 for _, v in self.terms[c])
			),
			key=lambda c: (len(self.terms[c]), c),
		)
		self.costly_vars = [v for v in range(n) if self.ecost[v] > 0]

		priority = model.priorities if len(model.priorities) == n else [0] * n
		top = max(priority, default=0)
		self.lead_vars = [v for v in range(n) if top > 0 and priority[v] == top]
		lead = set(self.lead_vars)
		self.lead_rows = [
			c for c in self.branch_rows if all(v in lead for _, v in self.terms[c])
		]
		self.other_rows = [
			c for c in self.branch_rows if not all(v in lead for _, v in self.terms[c])
		]

		self.value = [-1] * n
		self.trail: List[int] = []
		self.queue: List[int] = []
		self.queued = [False] * num_rows
		self.stamp = [0] * n
		self.mark = 0
		self.node_bound = self.minact[self.obj_row] if self.obj_row is not None else 0

		self.incumbent: Optional[List[int]] = None
		self.incumbent_value: Optional[int] = None

	def _assign(self, v: int, val: int):
		self.value[v] = val
		self.trail.append(v)
		minact, maxact, nfree = self.minact, self.maxact, self.nfree
		queued, queue = self.queued, self.queue
		for c, a in self.occ[v]:
			nfree[c] -= 1
			if val:
				if a > 0:
					minact[c] += a
				else:
					maxact[c] += a
			elif a > 0:
				maxact[c] -= a
			else:
				minact[c] -= a
			if not queued[c]:
				queued[c] = True
				queue.append(c)

	def _undo(self, trail_length: int):
		minact, maxact, nfree, value = self.minact, self.maxact, self.nfree, self.value
		trail = self.trail
		while len(trail) > trail_length:
			v = trail.pop()
			val = value[v]
			value[v] = -1
			for c, a in self.occ[v]:
				nfree[c] += 1
				if val:
					if a > 0:
						minact[c] -= a
					else:
						maxact[c] -= a
				elif a > 0:
					maxact[c] += a
				else:
					minact[c] += a

	def _clear_queue(self):
		for c in self.queue:
			self.queued[c] = False
		self.queue.clear()

	def _propagate(self) -> bool:
		minact, maxact, value = self.minact, self.maxact, self.value
		lower, upper, terms, maxabs = self.lower, self.upper, self.terms, self.maxabs
		queue, queued = self.queue, self.queued
		while queue:
			c = queue.pop()
			queued[c] = False
			lo, hi = lower[c], upper[c]
			if minact[c] > hi or maxact[c] < lo:
				self._clear_queue()
				return False
			bound = maxabs[c]
			if hi - minact[c] >= bound and maxact[c] - lo >= bound:
				continue
			for a, v in terms[c]:
				if value[v] >= 0:
					continue
				if a > 0:
					if minact[c] + a > hi:
						self._assign(v, 0)
					elif maxact[c] - a < lo:
						self._assign(v, 1)
					else:
						continue
				else:
					if maxact[c] + a < lo:
						self._assign(v, 0)
					elif minact[c] - a > hi:
						self._assign(v, 1)
					else:
						continue
				self.stats.propagations += 1
				if minact[c] > hi or maxact[c] < lo:
					self._clear_queue()
					return False
		return True

	def _bound_and_fix(self):
		"""
		:return: (still feasible, fixed any variable)
		"""
		obj = self.obj_row
		lb = self.minact[obj]
		self.mark += 1
		mark, stamp, value, ecost = self.mark, self.stamp, self.value, self.ecost
		for c in self.cover_rows:
			demand = self.lower[c] - self.minact[c]
			if demand <= 0:
				continue
			free = [v for _, v in self.terms[c] if value[v] < 0]
			if any(stamp[v] == mark for v in free):
				continue
			extra = sum(sorted(ecost[v] for v in free)[: int(demand)])
			if extra <= 0:
				continue
			lb += extra
			for v in free:
				stamp[v] = mark
		self.node_bound = lb

		limit = self.upper[obj]
		if lb > limit:
			return False, False
		if limit == INF:
			return True, False
		changed = False
		for v in self.costly_vars:
			if value[v] < 0 and stamp[v] != mark and lb + ecost[v] > limit:
				self._assign(v, 0)
				self.stats.propagations += 1
				changed = True
		return True, changed

	def _process_node(self) -> bool:
		while True:
			if not self._propagate():
				return False
			if self.obj_row is None:
				return True
			ok, changed = self._bound_and_fix()
			if not ok:
				self._clear_queue()
				return False
			if not changed:
				return True

	def _tightness(self, v: int) -> int:
		count = 0
		for c, _ in self.occ[v]:
			if c == self.obj_row:
				continue
			bound = self.maxabs[c]
			if (
				self.upper[c] - self.minact[c] <= bound
				or self.maxact[c] - self.lower[c] <= bound
			):
				count += 1
		return count

	def _smallest_unmet(self, rows: List[int]) -> Optional[int]:
		best, best_free = None, None
		minact, lower, nfree = self.minact, self.lower, self.nfree
		for c in rows:
			if minact[c] >= lower[c]:
				continue
			if best is None or nfree[c] < best_free:
				best, best_free = c, nfree[c]
		return best

	def _most_tight(self, candidates: List[int]) -> int:
		return max(candidates, key=lambda v: (self._tightness(v), -v))

	def _select(self):
		value = self.value
		row = self._smallest_unmet(self.lead_rows)
		if row is not None:
			return self._most_tight([v for _, v in self.terms[row] if value[v] < 0]), 1
		free = [v for v in self.lead_vars if value[v] < 0]
		if free:
			var = self._most_tight(free)
			return var, 0 if self.cost[var] >= 0 else 1
		row = self._smallest_unmet(self.other_rows)
		if row is not None:
			return self._most_tight([v for _, v in self.terms[row] if value[v] < 0]), 1
		for v, val in enumerate(value):
			if val < 0:
				return v, 0 if self.cost[v] >= 0 else 1
		return None

	def _record_incumbent(self):
		assignment = list(self.value)
		if not self.model.is_feasible(assignment):
			raise RuntimeError(
				f"branch-and-bound produced an assignment violating model {self.model.name}"
			)
		internal = sum(self.cost[v] for v in range(self.n) if assignment[v])
		if self.incumbent is not None and internal >= self.incumbent_value:
			return
		self.incumbent, self.incumbent_value = assignment, internal
		self.stats.incumbents += 1
		if self.obj_row is not None:
			self.upper[self.obj_row] = internal - 1
		logger.debug(
			f"{self.model.name}: incumbent {self.sign * internal} "
			f"after {self.stats.nodes} nodes"
		)

	def _seed_warm_start(self):
		hint = self.model.warm_start
		if hint is None or len(hint) != self.n:
			return
		if self.model.is_feasible(hint):
			internal = sum(self.cost[v] for v in range(self.n) if hint[v])
			self.incumbent, self.incumbent_value = list(hint), internal
			if self.obj_row is not None:
				self.upper[self.obj_row] = internal - 1
			logger.debug(f"{self.model.name}: warm start accepted")
		else:
			logger.debug(f"{self.model.name}: warm start violates the model, dropped")

	def _limit_reached(self, start: float) -> bool:
		if (
			self.limits.node_limit is not None
			and self.stats.nodes >= self.limits.node_limit
		):
			return True
		if self.limits.time_limit is not None:
			return time.perf_counter() - start >= self.limits.time_limit
		return False

	def _reached_known_bound(self) -> bool:
		return (
			self.known_bound is not None
			and self.sign == 1
			and self.incumbent_value is not None
			and self.incumbent_value <= self.known_bound
		)

	def _backtrack(self, stack: List[list]) -> bool:
		while stack:
			frame = stack[-1]
			self._undo(frame[0])
			alternative = frame[2]
			if alternative is None:
				stack.pop()
				continue
			frame[2] = None
			self.stats.nodes += 1
			self._assign(frame[1], alternative)
			if self._process_node():
				return True
		return False

	def solve(self) -> SolveOutcome:
		start = time.perf_counter()
		self._seed_warm_start()
		if self.incumbent is not None and (
			self.stop_at_first or self._reached_known_bound()
		):
			trivial = self.minact[self.obj_row] if self.obj_row is not None else 0
			return self._finish("early", trivial, start)

		self.queue = list(range(len(self.terms)))
		self.queued = [True] * len(self.terms)
		if not self._process_node():
			return self._finish("exhausted", None, start)
		root_bound = self.node_bound

		# frame: [trail length, variable, untried value or None, bound at the parent]
		stack: List[list] = []
		while True:
			if self._limit_reached(start):
				bounds = [frame[3] for frame in stack] or [root_bound]
				return self._finish("limit", min(bounds), start)
			decision = self._select()
			if decision is None:
				self._record_incumbent()
				if self.stop_at_first or self._reached_known_bound():
					return self._finish("early", root_bound, start)
			else:
				var, first = decision
				self.stats.nodes += 1
				stack.append([len(self.trail), var, 1 - first, self.node_bound])
				self._assign(var, first)
				if self._process_node():
					continue
			if not self._backtrack(stack):
				return self._finish("exhausted", None, start)

	def _finish(self, reason: str, open_bound: Optional[int], start: float):
		self.stats.wall_time = time.perf_counter() - start
		if self.incumbent is not None:
			self.model.warm_start = list(self.incumbent)

		if self.incumbent is None:
			if reason == "exhausted":
				return SolveOutcome("infeasible", stats=self.stats)
			bound = None if open_bound is None else self.sign * open_bound
			return SolveOutcome("timeout", best_bound=bound, stats=self.stats)

		value = self.model.objective_value(self.incumbent)
		if self.obj_row is None:
			return SolveOutcome(
				"feasible" if reason != "limit" else "timeout",
				list(self.incumbent),
				0,
				0,
				self.stats,
			)
		if reason == "exhausted" or self._reached_known_bound():
			return SolveOutcome("optimal", list(self.incumbent), value, value, self.stats)

		internal_bound = self.incumbent_value
		if open_bound is not None:
			internal_bound = min(internal_bound, math.floor(open_bound))
		if self.known_bound is not None and self.sign == 1:
			internal_bound = max(internal_bound, self.known_bound)
		status = "timeout" if reason == "limit" else "feasible"
		return SolveOutcome(
			status, list(self.incumbent), value, self.sign * internal_bound, self.stats
		)


def solve(
	model: Model,
	limits: Optional[SolveLimits] = None,
	stop_at_first: Optional[bool] = None,
	known_bound: Optional[int] = None,
) -> SolveOutcome:
	"""
	Solve a 0-1 model with the built-in branch-and-bound engine.

	:param model: The model. Its ``warm_start`` is re-checked first and replaced
	    by the returned incumbent.
	:param limits: Time and node limits. Reaching one gives status ``timeout``.
	:param stop_at_first: Stop at the first feasible assignment.
	    Defaults to True only for models without objective.
	:param known_bound: A proven lower bound on the minimum. Search stops as soon
	    as an incumbent reaches it.
	:return: The outcome. Any returned assignment satisfies every constraint.
	"""
	outcome = BranchAndBound(model, limits, stop_at_first, known_bound).solve()
	logger.debug(
		f"{model.name}: {outcome.status} value={outcome.objective_value} "
		f"bound={outcome.best_bound} nodes={outcome.stats.nodes}"
	)
	return outcome
