import logging
import os

from minorcast.exceptions import (
	DuplicateEdgeError,
	GraphFormatError,
	InvalidVertexError,
	SelfLoopError,
)
from minorcast.graph.base import Graph

logger = logging.getLogger("MinorCast")


def load_graph(text: str) -> Graph:
	"""
	Parse an edge-list document.

	One edge per line as two nonnegative integers.
	``#`` starts a comment, and an optional ``p <num_vertices>`` header fixes the
	vertex count. Without a header the count is ``1 + max vertex id``.

	:param text: The document.
	:return: The parsed graph.
	"""
	header = None
	edges = []
	seen = set()
	for line_number, raw in enumerate(text.splitlines(), start=1):
		line = raw.split("#", 1)[0].strip()
		if not line:
			continue
		tokens = line.split()
		if tokens[0] == "p":
			if header is not None:
				raise GraphFormatError("repeated header line", line_number)
			if len(tokens) != 2 or not tokens[1].isdigit():
				raise GraphFormatError(f"malformed header {line!r}", line_number)
			header = (int(tokens[1]), line_number)
			continue
		if len(tokens) != 2 or not all(token.isdigit() for token in tokens):
			raise GraphFormatError(
				f"expected two nonnegative integers, got {line!r}", line_number
			)
		u, v = int(tokens[0]), int(tokens[1])
		if u == v:
			raise SelfLoopError(f"self-loop on vertex {u}", line_number)
		edge = (min(u, v), max(u, v))
		if edge in seen:
			raise DuplicateEdgeError(f"duplicate edge {u} {v}", line_number)
		seen.add(edge)
		edges.append((edge, line_number))

	max_id = max((e[1] for e, _ in edges), default=-1)
	if header is None:
		num_vertices = max_id + 1
	else:
		num_vertices = header[0]
		for (u, v), line_number in edges:
			if v >= num_vertices:
				raise GraphFormatError(
					f"vertex {v} exceeds header count {num_vertices}", line_number
				)
	return Graph.from_edges(num_vertices, [e for e, _ in edges])


def save_graph(g: Graph) -> str:
	"""Emit the edge-list format: ``p <n>`` header, then sorted edges."""
	lines = [f"p {g.num_vertices}"]
	lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
	return "\n".join(lines) + "\n"


def read_graph_file(path: str) -> Graph:
	if not os.path.exists(path):
		raise ValueError(f"Graph file {path} does not exist.")
	with open(path, "r", encoding="utf-8") as f:
		text = f.read()
	try:
		return load_graph(text)
	except (GraphFormatError, InvalidVertexError):
		logger.error(f"Could not parse graph file {path}")
		raise


def write_graph_file(g: Graph, path: str):
	output_dir = os.path.dirname(os.path.abspath(path))
	if not os.path.isdir(output_dir):
		raise NotADirectoryError(f"directory {output_dir} not found.")
	with open(path, "w", encoding="utf-8") as f:
		f.write(save_graph(g))
	logger.info(
		f"Wrote graph with {g.num_vertices} vertices and {g.num_edges} edges to {path}"
	)
