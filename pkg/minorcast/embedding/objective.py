from minorcast.embedding.schema import VarCatalog
from minorcast.milp import Model
from minorcast.support import get_support_objectives


def feasibility_objective(model: Model, catalog: VarCatalog):
	model.clear_objective()


def min_size_objective(model: Model, catalog: VarCatalog):
	"""Minimize the number of used target vertices."""
	model.set_objective([(1, var) for _, var in sorted(catalog.alpha.items())])


def apply_objective(objective: str, model: Model, catalog: VarCatalog):
	get_support_objectives(objective)(model, catalog)
