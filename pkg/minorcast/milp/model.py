import copy
import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Literal, Optional, Sequence, Tuple

from minorcast.exceptions import UnknownVariableError

logger = logging.getLogger("MinorCast")

Term = Tuple[int, int]  # (coefficient, variable id)
INF = math.inf


def merge_terms(terms: Iterable[Term]) -> Tuple[Term, ...]:
	"""Sum coefficients per variable, drop zeros, order by variable id."""
	merged: Dict[int, int] = {}
	for coef, var in terms:
		if int(coef) != coef:
			raise ValueError(f"coefficients must be integers, got {coef}")
		merged[var] = merged.get(var, 0) + int(coef)
	return tuple((c, v) for v, c in sorted(merged.items()) if c != 0)


@dataclass(frozen=True)
class LinearConstraint:
	"""
	``lower <= sum(coef * x) <= upper`` over binary variables.
	``tag`` names the constraint family it came from.
	"""

	terms: Tuple[Term, ...]
	lower: float = -INF
	upper: float = INF
	tag: str = ""

	def __post_init__(self):
		if self.lower > self.upper:
			raise ValueError(
				f"constraint {self.tag!r} has lower {self.lower} above upper {self.upper}"
			)
		seen = [v for _, v in self.terms]
		assert len(seen) == len(set(seen)), "terms must be merged per variable"

	@classmethod
	def build(
		cls,
		terms: Iterable[Term],
		lower: float = -INF,
		upper: float = INF,
		tag: str = "",
	) -> "LinearConstraint":
		return cls(merge_terms(terms), lower, upper, tag)

	def activity(self, assignment: Sequence[int]) -> int:
		return sum(coef * assignment[var] for coef, var in self.terms)

	def is_satisfied(self, assignment: Sequence[int]) -> bool:
		value = self.activity(assignment)
		return self.lower <= value <= self.upper

	@property
	def variables(self) -> List[int]:
		return [v for _, v in self.terms]


@dataclass(frozen=True)
class Objective:
	terms: Tuple[Term, ...]
	sense: Literal["minimize", "maximize"] = "minimize"

	def value(self, assignment: Sequence[int]) -> int:
		return sum(coef * assignment[var] for coef, var in self.terms)


class Model:
	"""
	A 0-1 linear program: named binary variables, constraints, and an optional
	objective. A model without objective is a feasibility problem.

	The model is mutated in place by cut loops. ``warm_start`` keeps the last
	incumbent so the next solve can re-check it before searching.
	``priorities`` holds one branching priority per variable; higher goes first.
	"""

	def __init__(self, name: str = "model"):
		self.name = name
		self.variable_names: List[str] = []
		self.priorities: List[int] = []
		self._index: Dict[str, int] = {}
		self.constraints: List[LinearConstraint] = []
		self.objective: Optional[Objective] = None
		self.warm_start: Optional[List[int]] = None

	@property
	def num_variables(self) -> int:
		return len(self.variable_names)

	def add_variable(self, name: str, priority: int = 0) -> int:
		if name in self._index:
			raise ValueError(f"variable {name} is already declared.")
		self._index[name] = len(self.variable_names)
		self.variable_names.append(name)
		self.priorities.append(priority)
		return self._index[name]

	def variable(self, name: str) -> int:
		if name not in self._index:
			raise UnknownVariableError(name)
		return self._index[name]

	def _check_terms(self, terms: Iterable[Term]):
		for _, var in terms:
			if not (isinstance(var, int) and 0 <= var < self.num_variables):
				raise UnknownVariableError(
					f"variable id {var} is not declared in model {self.name}"
				)

	def add_constraint(self, constraint: LinearConstraint) -> "Model":
		self._check_terms(constraint.terms)
		self.constraints.append(constraint)
		return self

	def add(
		self,
		terms: Iterable[Term],
		lower: float = -INF,
		upper: float = INF,
		tag: str = "",
	) -> LinearConstraint:
		terms = list(terms)
		self._check_terms(terms)
		constraint = LinearConstraint.build(terms, lower, upper, tag)
		self.constraints.append(constraint)
		return constraint

	def set_objective(self, terms: Iterable[Term], sense: str = "minimize"):
		terms = list(terms)
		self._check_terms(terms)
		if sense not in ("minimize", "maximize"):
			raise ValueError(f"sense must be minimize or maximize, got {sense}")
		self.objective = Objective(merge_terms(terms), sense)

	def clear_objective(self):
		self.objective = None

	def violated_constraints(self, assignment: Sequence[int]) -> List[int]:
		if len(assignment) != self.num_variables:
			raise ValueError(
				f"assignment has {len(assignment)} entries, "
				f"model has {self.num_variables} variables"
			)
		return [
			i for i, c in enumerate(self.constraints) if not c.is_satisfied(assignment)
		]

	def is_feasible(self, assignment: Sequence[int]) -> bool:
		if any(value not in (0, 1) for value in assignment):
			return False
		return not self.violated_constraints(assignment)

	def objective_value(self, assignment: Sequence[int]) -> int:
		if self.objective is None:
			return 0
		return self.objective.value(assignment)

	def tag_counts(self) -> Dict[str, int]:
		counts: Dict[str, int] = {}
		for c in self.constraints:
			counts[c.tag] = counts.get(c.tag, 0) + 1
		return counts

	def copy(self) -> "Model":
		return copy.deepcopy(self)

	def __repr__(self):
		return (
			f"Model({self.name!r}, variables={self.num_variables}, "
			f"constraints={len(self.constraints)}, "
			f"objective={'none' if self.objective is None else self.objective.sense})"
		)
