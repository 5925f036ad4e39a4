from .decomposition import (
	ConnectivityReport,
	DisconnectedModel,
	MasterState,
	build_master,
	check_connectivity,
	make_cut,
	solve_decomposition,
)
from .heuristic import (
	contraction_search,
	initial_embedding,
	lift_assignment,
	size_lower_bound,
)
from .monolithic import DEFAULT_K, build_monolithic, decode, solve_monolithic
from .oracle import (
	DEFAULT_VERTEX_CAP,
	OracleResult,
	enumerate_embeddings,
	oracle_min_embedding,
	solve_oracle,
)
from .schema import (
	EmbedProblem,
	EmbedResult,
	Embedding,
	EmbeddingDocument,
	IterationRecord,
	VarCatalog,
)
from .verify import VerifyReport, Violation, verify_embedding
