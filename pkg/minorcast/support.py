import importlib
from typing import Callable, Dict


def dynamically_find_function(key: str, target_dict: Dict) -> Callable:
	if key in target_dict:
		module_path, func_name = target_dict[key]
		module = importlib.import_module(module_path)
		func = getattr(module, func_name)
		return func
	else:
		raise KeyError(f"Input method or generator {key} is not supported.")


def get_support_methods(method_name: str) -> Callable:
	support_methods = {
		"monolithic": ("minorcast.embedding.monolithic", "solve_monolithic"),
		"decomposition": ("minorcast.embedding.decomposition", "solve_decomposition"),
		"oracle": ("minorcast.embedding.oracle", "solve_oracle"),
	}
	return dynamically_find_function(method_name, support_methods)


def get_support_builders(method_name: str) -> Callable:
	support_builders = {
		"monolithic": ("minorcast.embedding.monolithic", "build_monolithic"),
		"decomposition": ("minorcast.embedding.decomposition", "build_master"),
	}
	return dynamically_find_function(method_name, support_builders)


def get_support_objectives(objective_name: str) -> Callable:
	support_objectives = {
		"feasible": ("minorcast.embedding.objective", "feasibility_objective"),
		"min_size": ("minorcast.embedding.objective", "min_size_objective"),
		"min-size": ("minorcast.embedding.objective", "min_size_objective"),
	}
	return dynamically_find_function(objective_name, support_objectives)


def get_support_generators(family: str) -> Callable:
	support_generators = {
		"chimera": ("minorcast.topology.chimera", "gen_chimera"),
		"pegasus": ("minorcast.topology.pegasus", "gen_pegasus"),
		"er": ("minorcast.topology.random_graph", "gen_erdos_renyi"),
		"erdos_renyi": ("minorcast.topology.random_graph", "gen_erdos_renyi"),
		"structured": ("minorcast.topology.structured", "gen_structured_instance"),
	}
	return dynamically_find_function(family, support_generators)


def get_support_specs(family: str) -> Callable:
	support_specs = {
		"chimera": ("minorcast.topology.spec", "ChimeraSpec"),
		"pegasus": ("minorcast.topology.spec", "PegasusSpec"),
		"er": ("minorcast.topology.spec", "ErdosRenyiSpec"),
		"erdos_renyi": ("minorcast.topology.spec", "ErdosRenyiSpec"),
		"structured": ("minorcast.topology.spec", "StructuredSpec"),
	}
	return dynamically_find_function(family, support_specs)
