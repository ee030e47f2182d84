from .checks import (
    SolverOracleMismatch,
    ValueCache,
    check_corollaries,
    check_edge_contraction,
    check_edge_deletion,
    check_odot,
    check_odot_ratio,
    check_path_cycle_formula,
    check_subdivision,
    check_vertex_contraction,
    check_vertex_deletion,
    check_wheel_equality,
    check_wheel_gap,
)
from .records import BOUND_FORMULAS, THEOREMS, Bound, VerificationRecord
from .search import ConjectureReport, SHARPNESS_BOUNDS, find_sharpness_witnesses, search_conjecture
from .suite import SuiteConfig, SuiteReport, run_suite

__all__ = [
    "SolverOracleMismatch",
    "ValueCache",
    "check_corollaries",
    "check_edge_contraction",
    "check_edge_deletion",
    "check_odot",
    "check_odot_ratio",
    "check_path_cycle_formula",
    "check_subdivision",
    "check_vertex_contraction",
    "check_vertex_deletion",
    "check_wheel_equality",
    "check_wheel_gap",
    "BOUND_FORMULAS",
    "THEOREMS",
    "Bound",
    "VerificationRecord",
    "ConjectureReport",
    "SHARPNESS_BOUNDS",
    "find_sharpness_witnesses",
    "search_conjecture",
    "SuiteConfig",
    "SuiteReport",
    "run_suite",
]
