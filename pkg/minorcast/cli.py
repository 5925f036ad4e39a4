import json
import logging
import os
import sys
from typing import Optional, Tuple

import click

from minorcast import __version__
from minorcast.bench import run_bench
from minorcast.embedding import (
	EmbedProblem,
	EmbedResult,
	EmbeddingDocument,
	oracle_min_embedding,
	verify_embedding,
)
from minorcast.embedding.oracle import DEFAULT_VERTEX_CAP
from minorcast.exceptions import (
	CutSoundnessError,
	EmbeddingConsistencyError,
	GeneratorRetryError,
	OracleCapError,
)
from minorcast.graph import Graph, write_graph_file
from minorcast.milp import SolveLimits, SolveStats, write_lp_file
from minorcast.support import get_support_builders, get_support_methods
from minorcast.topology.factory import build_spec, generate, resolve_graph

logger = logging.getLogger("MinorCast")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CODES = {"optimal": EXIT_OK, "feasible": EXIT_OK, "infeasible": 2, "timeout": 3}


class ExitCodeGroup(click.Group):
	"""Usage errors exit with 1. Exit code 2 means an infeasible instance."""

	def make_context(self, info_name, args, parent=None, **extra):
		try:
			return super().make_context(info_name, args, parent=parent, **extra)
		except click.UsageError as e:
			e.exit_code = EXIT_ERROR
			raise

	def invoke(self, ctx):
		try:
			return super().invoke(ctx)
		except click.UsageError as e:
			e.exit_code = EXIT_ERROR
			raise


@click.group(cls=ExitCodeGroup)
def cli():
	pass


def _fail(message: str):
	logger.error(message)
	sys.exit(EXIT_ERROR)


def _load_graphs(source: str, target: str, seed: Optional[int]) -> Tuple[Graph, Graph]:
	try:
		source_graph, _ = resolve_graph(source, seed)
		target_graph, _ = resolve_graph(target, seed)
	except (ValueError, KeyError, GeneratorRetryError) as e:
		_fail(f"Could not load graphs: {e}")
	return source_graph, target_graph


def _write_text(text: str, output: Optional[str]):
	if output is None:
		click.echo(text, nl=False)
		return
	with open(output, "w") as f:
		f.write(text)


def _write_generated(graph: Graph, metadata: dict, output: str):
	write_graph_file(graph, output)
	metadata = {**metadata, "version": __version__}
	with open(f"{output}.meta.json", "w") as f:
		json.dump(metadata, f, indent=2, sort_keys=True)
		f.write("\n")
	logger.info(
		f"Wrote {graph.num_vertices} vertices and {graph.num_edges} edges to {output}"
	)


def _generate(family: str, output: str, **params):
	try:
		graph, metadata = generate(family, build_spec(family, **params))
	except (ValueError, GeneratorRetryError) as e:
		_fail(f"Could not generate {family} graph: {e}")
	_write_generated(graph, metadata, output)


output_option = click.option(
	"--output", "-o", type=click.Path(), required=True, help="Edge-list output path."
)
seed_option = click.option(
	"--seed",
	type=int,
	envvar="MINORCAST_SEED",
	default=0,
	show_default=True,
	help="RNG seed. Falls back to MINORCAST_SEED.",
)


@click.group()
def gen():
	"""Generate target and source graphs."""


@gen.command("chimera")
@click.option("-L", "L", type=int, default=4, show_default=True, help="Cell half-size.")
@click.option("-M", "M", type=int, default=1, show_default=True, help="Grid rows.")
@click.option("-N", "N", type=int, default=1, show_default=True, help="Grid columns.")
@output_option
def gen_chimera(L: int, M: int, N: int, output: str):
	_generate("chimera", output, L=L, M=M, N=N)


@gen.command("pegasus")
@click.option("-M", "M", type=int, default=1, show_default=True, help="Grid rows.")
@click.option("-N", "N", type=int, default=1, show_default=True, help="Grid columns.")
@output_option
def gen_pegasus(M: int, N: int, output: str):
	_generate("pegasus", output, M=M, N=N)


@gen.command("er")
@click.option("--nu", type=int, required=True, help="Number of vertices.")
@click.option("--p", type=float, required=True, help="Edge probability.")
@seed_option
@output_option
def gen_er(nu: int, p: float, seed: int, output: str):
	_generate("er", output, nu=nu, p=p, seed=seed)


@gen.command("structured")
@click.option("--zeta", type=int, default=0, show_default=True, help="Contracted edges.")
@click.option("--p-inter", type=float, default=0.5, show_default=True)
@click.option("--p-intra", type=float, default=0.5, show_default=True)
@click.option("--cells", type=click.Choice(["2", "4"]), default="2", show_default=True)
@click.option("--max-retries", type=int, default=100, show_default=True)
@seed_option
@output_option
def gen_structured(
	zeta: int,
	p_inter: float,
	p_intra: float,
	cells: str,
	max_retries: int,
	seed: int,
	output: str,
):
	_generate(
		"structured",
		output,
		zeta=zeta,
		p_inter=p_inter,
		p_intra=p_intra,
		cells=int(cells),
		max_retries=max_retries,
		seed=seed,
	)


@gen.command("illustrative")
@output_option
def gen_illustrative(output: str):
	graph, metadata = resolve_graph("illustrative")
	_write_generated(graph, metadata, output)


graph_options = [
	click.option(
		"--source", "-s", required=True, help="Source graph file or generator string."
	),
	click.option(
		"--target", "-t", required=True, help="Target graph file or generator string."
	),
]


def with_graph_options(func):
	for option in reversed(graph_options):
		func = option(func)
	return func


@click.command()
@with_graph_options
@click.option(
	"--method",
	type=click.Choice(["monolithic", "decomposition", "oracle"]),
	default="decomposition",
	show_default=True,
)
@click.option(
	"--objective",
	type=click.Choice(["feasible", "min-size"]),
	default="min-size",
	show_default=True,
)
@click.option("-k", type=int, default=None, help="Fiber size cap.")
@click.option("--strict-uniqueness", is_flag=True, default=False)
@click.option("--time-limit", type=float, default=300.0, show_default=True)
@click.option("--node-limit", type=int, default=None)
@click.option(
	"--warm-start/--no-warm-start",
	default=True,
	show_default=True,
	help="Seed the solver with a contraction search.",
)
@seed_option
@click.option("--output", "-o", type=click.Path(), default=None, help="Embedding JSON path.")
@click.option("--trace", type=click.Path(), default=None, help="Iteration trace path.")
def embed(
	source: str,
	target: str,
	method: str,
	objective: str,
	k: Optional[int],
	strict_uniqueness: bool,
	time_limit: float,
	node_limit: Optional[int],
	warm_start: bool,
	seed: int,
	output: Optional[str],
	trace: Optional[str],
):
	source_graph, target_graph = _load_graphs(source, target, seed)
	try:
		problem = EmbedProblem(
			target_graph,
			source_graph,
			k=k,
			objective=objective,
			limits=SolveLimits(time_limit, node_limit),
			strict_uniqueness=strict_uniqueness,
			warm_start=warm_start,
		)
		result = get_support_methods(method)(problem)
	except OracleCapError as e:
		_fail(f"Oracle refused the instance: {e}")
	except (EmbeddingConsistencyError, CutSoundnessError) as e:
		_fail(f"{method} produced an inconsistent result: {e}")
	except ValueError as e:
		_fail(str(e))

	if result.embedding is not None:
		report = verify_embedding(result.embedding, target_graph, source_graph)
		if not report.valid:
			_fail(f"Embedding failed verification: {report.violations}")

	document = EmbeddingDocument.from_result(
		result, source_graph, target_graph, seed, __version__
	)
	_write_text(document.to_json(), output)
	if trace is not None:
		_write_text("".join(f"{record.to_line()}\n" for record in result.trace), trace)
	logger.info(
		f"{method}: status={result.status} size={result.size} "
		f"bound={result.best_bound} reason={result.reason}"
	)
	sys.exit(EXIT_CODES[result.status])


@click.command()
@with_graph_options
@click.option(
	"--method",
	type=click.Choice(["monolithic", "decomposition"]),
	default="monolithic",
	show_default=True,
)
@click.option(
	"--objective",
	type=click.Choice(["feasible", "min-size"]),
	default="min-size",
	show_default=True,
)
@click.option("-k", type=int, default=None, help="Fiber size cap.")
@click.option("--strict-uniqueness", is_flag=True, default=False)
@seed_option
@click.option("--output", "-o", type=click.Path(), required=True, help="LP file path.")
def export(
	source: str,
	target: str,
	method: str,
	objective: str,
	k: Optional[int],
	strict_uniqueness: bool,
	seed: int,
	output: str,
):
	source_graph, target_graph = _load_graphs(source, target, seed)
	try:
		problem = EmbedProblem(
			target_graph,
			source_graph,
			k=k,
			objective=objective,
			strict_uniqueness=strict_uniqueness,
		)
	except ValueError as e:
		_fail(str(e))
	built = get_support_builders(method)(problem)
	model = built[0] if isinstance(built, tuple) else built.model
	write_lp_file(model, output)
	logger.info(f"Wrote {model.name} to {output}")


@click.command()
@click.option(
	"--embedding",
	"-e",
	"embedding_path",
	type=click.Path(),
	required=True,
	help="Embedding JSON written by embed or oracle.",
)
@with_graph_options
def verify(embedding_path: str, source: str, target: str):
	if not os.path.exists(embedding_path):
		_fail(f"Embedding file {embedding_path} does not exist.")
	source_graph, target_graph = _load_graphs(source, target, None)
	try:
		with open(embedding_path, "r") as f:
			document = EmbeddingDocument.model_validate_json(f.read())
		if not document.vertex_models:
			_fail(f"{embedding_path} holds no embedding (status {document.status})")
		embedding = document.embedding(source_graph, target_graph)
		report = verify_embedding(embedding, target_graph, source_graph)
	except ValueError as e:
		_fail(f"Could not read embedding: {e}")

	if report.valid:
		click.echo(f"valid embedding of size {embedding.size}")
		sys.exit(EXIT_OK)
	for violation in report.violations:
		click.echo(f"{violation.kind}: {violation.detail}")
	sys.exit(EXIT_ERROR)


@click.command()
@with_graph_options
@click.option("--size-cap", type=int, default=None, help="Largest size to search.")
@click.option(
	"--vertex-cap", type=int, default=DEFAULT_VERTEX_CAP, show_default=True
)
@seed_option
@click.option("--output", "-o", type=click.Path(), default=None, help="Embedding JSON path.")
def oracle(
	source: str,
	target: str,
	size_cap: Optional[int],
	vertex_cap: int,
	seed: int,
	output: Optional[str],
):
	source_graph, target_graph = _load_graphs(source, target, seed)
	try:
		found = oracle_min_embedding(target_graph, source_graph, size_cap, vertex_cap)
	except OracleCapError as e:
		_fail(f"Oracle refused the instance: {e}")

	stats = SolveStats(nodes=found.nodes)
	if found.feasible:
		result = EmbedResult(
			"oracle",
			"optimal",
			"min_size",
			None,
			embedding=found.embedding,
			best_bound=found.size,
			stats=stats,
		)
	else:
		reason = "no embedding exists"
		if size_cap is not None:
			reason = f"no embedding of size at most {size_cap}"
		result = EmbedResult(
			"oracle", "infeasible", "min_size", None, stats=stats, reason=reason
		)
	document = EmbeddingDocument.from_result(
		result, source_graph, target_graph, seed, __version__
	)
	_write_text(document.to_json(), output)
	sys.exit(EXIT_CODES[result.status])


@click.command()
@click.option(
	"--manifest",
	"-m",
	type=click.Path(exists=True, dir_okay=False),
	required=True,
	help="Path to bench manifest yaml file.",
)
@click.option("--output", "-o", type=click.Path(), default=None, help="CSV output path.")
@click.option("--jobs", "-j", type=int, default=1, show_default=True)
def bench(manifest: str, output: Optional[str], jobs: int):
	if not manifest.endswith(".yaml") and not manifest.endswith(".yml"):
		_fail(f"Manifest {manifest} is not a yaml or yml file.")
	try:
		results = run_bench(manifest, jobs=max(1, jobs))
	except (ValueError, KeyError) as e:
		_fail(f"Invalid manifest {manifest}: {e}")
	_write_text(results.to_csv(index=False), output)
	failed = int((results["status"] == "error").sum())
	if failed:
		logger.warning(f"{failed} of {len(results)} bench runs failed")


cli.add_command(gen, "gen")
cli.add_command(embed, "embed")
cli.add_command(export, "export")
cli.add_command(verify, "verify")
cli.add_command(oracle, "oracle")
cli.add_command(bench, "bench")

if __name__ == "__main__":
	cli()
