from .lp_writer import export_lp, write_lp_file
from .model import INF, LinearConstraint, Model, Objective, merge_terms
from .solver import BranchAndBound, SolveLimits, SolveOutcome, SolveStats, solve
