import os
from typing import List, Sequence

from minorcast.milp.model import INF, Model, Term

TERMS_PER_LINE = 8


def _format_value(value: float) -> str:
	return str(int(value))


def _format_expression(terms: Sequence[Term], names: List[str]) -> str:
	if not terms:
		return "0"
	text = ""
	for i, (coef, var) in enumerate(terms):
		sign = "-" if coef < 0 else "+"
		magnitude = abs(coef)
		body = names[var] if magnitude == 1 else f"{magnitude} {names[var]}"
		if i == 0:
			text = f"- {body}" if sign == "-" else body
		elif i % TERMS_PER_LINE == 0:
			text += f"\n    {sign} {body}"
		else:
			text += f" {sign} {body}"
	return text


def export_lp(model: Model) -> str:
	"""
	Write the model in CPLEX LP format.

	Rows are named ``<tag>_<index>`` after their position in the model.
	Ranged rows become a ``_lo`` and a ``_hi`` row, and rows without finite
	bounds are left out. Models without objective get a constant 0 objective.
	Identical models always produce identical text.

	:param model: The model to export.
	:return: The LP document.
	"""
	names = model.variable_names
	lines = [f"\\ Problem: {model.name}"]
	if model.objective is None:
		lines += ["Minimize", " obj: 0"]
	else:
		header = "Minimize" if model.objective.sense == "minimize" else "Maximize"
		lines += [header, f" obj: {_format_expression(model.objective.terms, names)}"]

	lines.append("Subject To")
	for index, c in enumerate(model.constraints):
		name = f"{c.tag or 'c'}_{index}"
		expression = _format_expression(c.terms, names)
		if c.lower == c.upper:
			lines.append(f" {name}: {expression} = {_format_value(c.lower)}")
		elif c.lower > -INF and c.upper < INF:
			lines.append(f" {name}_lo: {expression} >= {_format_value(c.lower)}")
			lines.append(f" {name}_hi: {expression} <= {_format_value(c.upper)}")
		elif c.lower > -INF:
			lines.append(f" {name}: {expression} >= {_format_value(c.lower)}")
		elif c.upper < INF:
			lines.append(f" {name}: {expression} <= {_format_value(c.upper)}")

	lines.append("Binary")
	lines.extend(f" {name}" for name in names)
	lines.append("End")
	return "\n".join(lines) + "\n"


def write_lp_file(model: Model, path: str):
	output_dir = os.path.dirname(os.path.abspath(path))
	if not os.path.isdir(output_dir):
		raise NotADirectoryError(f"directory {output_dir} not found.")
	with open(path, "w", encoding="utf-8", newline="\n") as f:
		f.write(export_lp(model))
