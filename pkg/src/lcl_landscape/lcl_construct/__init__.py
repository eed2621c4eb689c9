"""Path, exponentiation tree and grid: builder, rule checker, labeling problem and solver."""

from .builder import MUTATIONS, ConstructionInstance, build_instance, corrupt
from .lower_bound import (
    LowerBoundCertificate,
    accepting_cell,
    build_lower_bound_instance,
    certify_lower_bound,
)
from .problem import lcl_problem_of
from .rules import CATALOG, RuleViolation, check_rules
from .solver import ConstructionSolver, solver

__all__ = [
    "CATALOG",
    "ConstructionInstance",
    "ConstructionSolver",
    "LowerBoundCertificate",
    "MUTATIONS",
    "RuleViolation",
    "accepting_cell",
    "build_instance",
    "build_lower_bound_instance",
    "certify_lower_bound",
    "check_rules",
    "corrupt",
    "lcl_problem_of",
    "solver",
]
