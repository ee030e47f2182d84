"""Verification records and the bound formulas they are checked against.

Each theorem's bounds are a pure function of a record's integer quantities
(:data:`BOUND_FORMULAS`), so any stored record can be re-evaluated without
re-running a solver.  Fractional bounds are doubled to stay in integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from ..ops import OperationDescriptor

THEOREMS = (
    "edge_deletion",
    "vertex_deletion",
    "wheel_equality",
    "wheel_gap",
    "edge_contraction",
    "contraction_conjecture",
    "corollary_edge",
    "vertex_contraction",
    "corollary_vertex",
    "odot",
    "odot_ratio",
    "subdivision_frac",
    "subdivision_dfrac",
    "path_cycle_formula",
)

SKIP_REASONS = (
    "disconnected",
    "bridge",
    "cut_vertex",
    "isolated_vertex_result",
    "degenerate_size",
    "budget",
    "formula_domain",
)


@dataclass(frozen=True, slots=True)
class Bound:
    """The inequality ``lhs <= rhs``."""

    name: str
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def tight(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict[str, Any]:
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


def _edge_deletion(q):
    g, r = q["chidom_G"], q["chidom_result"]
    return [Bound("lower", g - 1, r), Bound("upper", r, g + 2)]


def _vertex_deletion(q):
    g, r, d = q["chidom_G"], q["chidom_result"], q["deg_v"]
    return [Bound("lower", g - 1, r), Bound("upper", r, g + d - 1)]


def _wheel_equality(q):
    chi, dom, dt = q["chi"], q["chidom"], q["chidt"]
    return [
        Bound("chidom<=chi", dom, chi),
        Bound("chi<=chidom", chi, dom),
        Bound("chidt<=chi", dt, chi),
        Bound("chi<=chidt", chi, dt),
    ]


def _wheel_gap(q):
    if "prev_gap" not in q:
        return []
    return [Bound("growth", q["prev_gap"] + 1, q["gap"])]


def _edge_contraction(q):
    g, r = q["chidom_G"], q["chidom_result"]
    return [Bound("lower", g - 2, r), Bound("upper", r, g + 1)]


def _conjecture(q):
    return [Bound("conjecture", q["chidom_G"] - 1, q["chidom_result"])]


def _corollary_edge(q):
    s = q["chidom_delete"] + q["chidom_contract"]
    g2 = 2 * q["chidom_G"]
    return [Bound("lower_x2", s - 3, g2), Bound("upper_x2", g2, s + 3)]


def _vertex_contraction(q):
    g, r, d = q["chidom_G"], q["chidom_result"], q["deg_v"]
    return [Bound("lower", g - 1, r), Bound("upper", r, g + d - 1)]


def _corollary_vertex(q):
    s = q["chidom_delete"] + q["chidom_contract"]
    g2 = 2 * q["chidom_G"]
    d = q["deg_v"]
    return [Bound("lower_x2", s - 2 * d + 2, g2), Bound("upper_x2", g2, s + 2)]


def _odot(q):
    g, r, d = q["chidom_G"], q["chidom_result"], q["deg_v"]
    return [Bound("lower", g - d + 1, r), Bound("upper", r, g + 1)]


def _odot_ratio(q):
    # ratio(n) = num/den must exceed ratio(n-1) = prev_num/prev_den
    if "prev_num" not in q:
        return []
    return [Bound("growth", q["prev_num"] * q["den"] + 1, q["num"] * q["prev_den"])]


def _subdivision_frac(q):
    m, sub, pk, pk1 = q["m"], q["chidom_sub"], q["path_k"], q["path_k_plus_1"]
    return [Bound("lower", pk1, sub), Bound("upper", sub, (m - 1) * pk + pk1)]


def _subdivision_dfrac(q):
    m, delta, sub = q["m"], q["Delta"], q["chidom_sub"]
    low = 2 + delta * q["path_k_minus_1"] - 1
    return [Bound("lower", low, sub), Bound("upper", sub, low + (m - delta) * q["path_k"])]


def _path_cycle_formula(q):
    return [Bound("formula<=solver", q["formula"], q["chidom"]), Bound("solver<=formula", q["chidom"], q["formula"])]


BOUND_FORMULAS: dict[str, Callable[[dict[str, int]], list[Bound]]] = {
    "edge_deletion": _edge_deletion,
    "vertex_deletion": _vertex_deletion,
    "wheel_equality": _wheel_equality,
    "wheel_gap": _wheel_gap,
    "edge_contraction": _edge_contraction,
    "contraction_conjecture": _conjecture,
    "corollary_edge": _corollary_edge,
    "vertex_contraction": _vertex_contraction,
    "corollary_vertex": _corollary_vertex,
    "odot": _odot,
    "odot_ratio": _odot_ratio,
    "subdivision_frac": _subdivision_frac,
    "subdivision_dfrac": _subdivision_dfrac,
    "path_cycle_formula": _path_cycle_formula,
}


@dataclass(slots=True)
class VerificationRecord:
    theorem: str
    graph: str
    operation: Optional[OperationDescriptor] = None
    quantities: dict[str, int] = field(default_factory=dict)
    bounds: list[Bound] = field(default_factory=list)
    skip: Optional[str] = None
    certificates: dict[str, Any] = field(default_factory=dict)
    oracle_confirmed: Optional[bool] = None

    @classmethod
    def evaluated(cls, theorem: str, graph: str, operation: Optional[OperationDescriptor], quantities: dict[str, int]) -> VerificationRecord:
        return cls(theorem, graph, operation, quantities, BOUND_FORMULAS[theorem](quantities))

    @classmethod
    def skipped(cls, theorem: str, graph: str, operation: Optional[OperationDescriptor], reason: str, quantities: dict[str, int] | None = None) -> VerificationRecord:
        assert reason in SKIP_REASONS, reason
        return cls(theorem, graph, operation, dict(quantities or {}), [], reason)

    @property
    def violated(self) -> bool:
        return any(not b.holds for b in self.bounds)

    @property
    def tight(self) -> list[str]:
        return [b.name for b in self.bounds if b.tight]

    def bound(self, name: str) -> Bound:
        return next(b for b in self.bounds if b.name == name)

    def consistent(self) -> bool:
        """Stored bounds match a fresh evaluation of the quantities."""
        if self.skip is not None:
            return not self.bounds
        return self.bounds == BOUND_FORMULAS[self.theorem](self.quantities)

    def sort_key(self) -> tuple:
        op = self.operation.sort_key() if self.operation is not None else ()
        return (self.graph, op, self.theorem)

    def to_json(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "graph": self.graph,
            "operation": self.operation.to_json() if self.operation is not None else None,
            "quantities": dict(sorted(self.quantities.items())),
            "bounds": [b.to_json() for b in self.bounds],
            "tight": self.tight,
            "skip": self.skip,
            "certificates": self.certificates,
            "oracle_confirmed": self.oracle_confirmed,
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> VerificationRecord:
        op = data.get("operation")
        return cls(
            data["theorem"],
            data["graph"],
            OperationDescriptor.from_json(op) if op else None,
            dict(data["quantities"]),
            [Bound(b["name"], b["lhs"], b["rhs"]) for b in data["bounds"]],
            data.get("skip"),
            dict(data.get("certificates", {})),
            data.get("oracle_confirmed"),
        )
