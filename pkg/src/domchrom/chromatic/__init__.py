from .coloring import (
    Coloring,
    DominatedColoringCertificate,
    ProperColoringCertificate,
    TotalDominatorCertificate,
    find_dominators,
    find_td_witnesses,
    is_dominated_coloring,
    is_proper,
    is_total_dominator_coloring,
)
from .formulas import formula_complete, formula_cycle, formula_path, formula_star, formula_wheel
from .oracle import ORACLE_MAX_VERTICES, oracle_dominated_chromatic, restricted_growth_strings
from .solver import (
    DEFAULT_MAX_VERTICES,
    SearchStats,
    SolveResult,
    branching_order,
    chromatic_number,
    dominated_chromatic_number,
    greedy_clique_bound,
    total_dominator_chromatic_number,
)

__all__ = [
    "Coloring",
    "DominatedColoringCertificate",
    "ProperColoringCertificate",
    "TotalDominatorCertificate",
    "find_dominators",
    "find_td_witnesses",
    "is_dominated_coloring",
    "is_proper",
    "is_total_dominator_coloring",
    "formula_complete",
    "formula_cycle",
    "formula_path",
    "formula_star",
    "formula_wheel",
    "ORACLE_MAX_VERTICES",
    "oracle_dominated_chromatic",
    "restricted_growth_strings",
    "DEFAULT_MAX_VERTICES",
    "SearchStats",
    "SolveResult",
    "branching_order",
    "chromatic_number",
    "dominated_chromatic_number",
    "greedy_clique_bound",
    "total_dominator_chromatic_number",
]
