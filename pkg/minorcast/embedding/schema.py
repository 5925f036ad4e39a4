import json
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel

from minorcast.exceptions import InvalidVertexError
from minorcast.graph import Graph, Path
from minorcast.milp import LinearConstraint, SolveLimits, SolveStats
from minorcast.utils.util import relative_gap

logger = logging.getLogger("MinorCast")

Objective = Literal["feasible", "min_size"]
Edge = Tuple[int, int]


def normalize_objective(objective: str) -> str:
	objective = objective.replace("-", "_")
	if objective not in ("feasible", "min_size"):
		raise ValueError(f"objective must be feasible or min_size, got {objective}")
	return objective


@dataclass
class EmbedProblem:
	"""
	Embed ``source`` (Y, m vertices) into ``target`` (X, n vertices).
	``k`` caps the fiber size; None means the method's own default.
	``warm_start`` seeds the model-based methods with a contraction search.
	"""

	target: Graph
	source: Graph
	k: Optional[int] = None
	objective: Objective = "min_size"
	limits: SolveLimits = field(default_factory=SolveLimits)
	strict_uniqueness: bool = False
	warm_start: bool = True

	def __post_init__(self):
		self.objective = normalize_objective(self.objective)
		if self.k is not None and self.k < 1:
			raise ValueError(f"k must be at least 1, got {self.k}")
		if self.target.num_vertices == 0 or self.source.num_vertices == 0:
			raise ValueError("target and source graphs must be non-empty.")

	@property
	def n(self) -> int:
		return self.target.num_vertices

	@property
	def m(self) -> int:
		return self.source.num_vertices

	@property
	def trivially_infeasible(self) -> bool:
		return self.m > self.n


@dataclass(frozen=True)
class Embedding:
	"""Map from each source vertex to its vertex model in the target."""

	vertex_models: Dict[int, FrozenSet[int]]

	@classmethod
	def from_models(cls, models: Dict[int, Sequence[int]]) -> "Embedding":
		return cls({y: frozenset(xs) for y, xs in sorted(models.items())})

	@classmethod
	def from_assignment(cls, pi: Sequence[int], num_sources: int) -> "Embedding":
		"""
		:param pi: Per target vertex, the source vertex it represents or -1.
		"""
		models: Dict[int, List[int]] = {y: [] for y in range(num_sources)}
		for x, y in enumerate(pi):
			if y >= 0:
				models[y].append(x)
		return cls.from_models(models)

	@property
	def size(self) -> int:
		return sum(len(xs) for xs in self.vertex_models.values())

	@property
	def max_fiber(self) -> int:
		return max((len(xs) for xs in self.vertex_models.values()), default=0)

	def inverse(self) -> Dict[int, int]:
		return {x: y for y, xs in self.vertex_models.items() for x in xs}

	def to_labels(self, source: Graph, target: Graph) -> Dict[str, List[str]]:
		return {
			source.label(y): [target.label(x) for x in sorted(xs)]
			for y, xs in sorted(self.vertex_models.items())
		}

	@classmethod
	def from_labels(
		cls, labelled: Dict[str, List[str]], source: Graph, target: Graph
	) -> "Embedding":
		def lookup(g: Graph, label: str) -> int:
			labels = g.labels or []
			if label in labels:
				return labels.index(label)
			try:
				v = int(label)
			except ValueError:
				raise InvalidVertexError(f"unknown vertex label {label!r}")
			g.check_vertex(v)
			return v

		return cls.from_models(
			{
				lookup(source, y): [lookup(target, x) for x in xs]
				for y, xs in labelled.items()
			}
		)


@dataclass
class VarCatalog:
	"""Variable ids of each symbol family, keyed by the indices they stand for."""

	alpha: Dict[Tuple[int, int], int] = field(default_factory=dict)
	gamma: Dict[Tuple[Path, int], int] = field(default_factory=dict)
	delta_par: Dict[Tuple[Edge, Edge], int] = field(default_factory=dict)
	delta_perp: Dict[Tuple[Edge, Edge], int] = field(default_factory=dict)
	z: Dict[Tuple[Edge, Edge, str], int] = field(default_factory=dict)
	w: Dict[int, int] = field(default_factory=dict)

	def alpha_vector(self, assignment: Sequence[int]) -> Tuple[int, ...]:
		return tuple(assignment[v] for _, v in sorted(self.alpha.items()))

	def candidate_models(
		self, assignment: Sequence[int], num_sources: int
	) -> Dict[int, FrozenSet[int]]:
		models: Dict[int, set] = {y: set() for y in range(num_sources)}
		for (x, y), var in self.alpha.items():
			if assignment[var]:
				models[y].add(x)
		return {y: frozenset(xs) for y, xs in sorted(models.items())}


@dataclass
class IterationRecord:
	iteration: int
	master_status: str
	master_objective: Optional[int]
	cuts_added: int
	elapsed: float

	def to_line(self) -> str:
		return (
			f"iteration={self.iteration} status={self.master_status} "
			f"master_objective={self.master_objective} cuts={self.cuts_added} "
			f"elapsed={self.elapsed:.3f}"
		)


@dataclass
class EmbedResult:
	"""
	Outcome of one embedding run.
	Infeasibility is relative to ``k`` whenever the method caps fiber sizes.
	``cut_rows`` holds the no-good cuts a decomposition run added, in order.
	"""

	method: str
	status: str
	objective: str
	k: Optional[int]
	embedding: Optional[Embedding] = None
	best_bound: Optional[int] = None
	stats: SolveStats = field(default_factory=SolveStats)
	iterations: int = 0
	cuts: int = 0
	reason: Optional[str] = None
	trace: List[IterationRecord] = field(default_factory=list)
	cut_rows: List[LinearConstraint] = field(default_factory=list)

	@property
	def size(self) -> Optional[int]:
		return None if self.embedding is None else self.embedding.size

	@property
	def gap(self) -> Optional[float]:
		return relative_gap(self.size, self.best_bound)


class EmbeddingStats(BaseModel):
	nodes: int = 0
	propagations: int = 0
	iterations: int = 0
	cuts: int = 0
	wall_time: float = 0.0


class EmbeddingDocument(BaseModel):
	"""The JSON document written by ``embed`` and ``oracle`` and read by ``verify``."""

	status: Literal["optimal", "feasible", "infeasible", "timeout"]
	objective: str
	size: Optional[int] = None
	best_bound: Optional[int] = None
	gap: Optional[float] = None
	k: Optional[int] = None
	method: str
	seed: Optional[int] = None
	version: str
	reason: Optional[str] = None
	vertex_models: Dict[str, List[str]] = {}
	stats: EmbeddingStats = EmbeddingStats()

	@classmethod
	def from_result(
		cls,
		result: EmbedResult,
		source: Graph,
		target: Graph,
		seed: Optional[int],
		version: str,
	) -> "EmbeddingDocument":
		vertex_models = (
			{} if result.embedding is None else result.embedding.to_labels(source, target)
		)
		gap = result.gap
		return cls(
			status=result.status,
			objective=result.objective,
			size=result.size,
			best_bound=result.best_bound,
			gap=None if gap is None else round(gap, 6),
			k=result.k,
			method=result.method,
			seed=seed,
			version=version,
			reason=result.reason,
			vertex_models=vertex_models,
			stats=EmbeddingStats(
				nodes=result.stats.nodes,
				propagations=result.stats.propagations,
				iterations=result.iterations,
				cuts=result.cuts,
				wall_time=round(result.stats.wall_time, 6),
			),
		)

	def to_json(self) -> str:
		return json.dumps(self.model_dump(), indent=2) + "\n"

	def embedding(self, source: Graph, target: Graph) -> Embedding:
		return Embedding.from_labels(self.vertex_models, source, target)
