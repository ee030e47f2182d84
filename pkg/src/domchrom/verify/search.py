"""Conjecture counterexample search and sharpness-witness search."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from ..enumeration import MAX_ENUMERATION_N, enumerate_connected_graphs
from ..errors import ArgumentError, BudgetError
from ..graph import Graph
from .checks import (
    ValueCache,
    check_corollaries,
    check_edge_contraction,
    check_edge_deletion,
    check_odot,
    check_vertex_contraction,
    check_vertex_deletion,
)
from .parallel import enumeration_units, run_units, worker_cache
from .records import VerificationRecord

_TWO_SIDED = {"lower": "lower", "upper": "upper"}
_DOUBLED = {"lower": "lower_x2", "upper": "upper_x2"}

SHARPNESS_BOUNDS: dict[str, dict[str, str]] = {
    "edge_deletion": _TWO_SIDED,
    "vertex_deletion": _TWO_SIDED,
    "edge_contraction": _TWO_SIDED,
    "vertex_contraction": _TWO_SIDED,
    "odot": _TWO_SIDED,
    "contraction_conjecture": {"lower": "conjecture"},
    "corollary_edge": _DOUBLED,
    "corollary_vertex": _DOUBLED,
}


def records_for(theorem: str, g: Graph, cache: ValueCache) -> list[VerificationRecord]:
    """All records of one per-graph theorem on ``g``."""
    checks: dict[str, Callable[[Graph, ValueCache], list[VerificationRecord]]] = {
        "edge_deletion": check_edge_deletion,
        "vertex_deletion": check_vertex_deletion,
        "edge_contraction": lambda g, c: check_edge_contraction(g, c, conjecture=False),
        "contraction_conjecture": lambda g, c: [
            r for r in check_edge_contraction(g, c) if r.theorem == "contraction_conjecture"
        ],
        "vertex_contraction": check_vertex_contraction,
        "odot": check_odot,
        "corollary_edge": lambda g, c: [r for r in check_corollaries(g, c) if r.theorem == "corollary_edge"],
        "corollary_vertex": lambda g, c: [r for r in check_corollaries(g, c) if r.theorem == "corollary_vertex"],
    }
    return checks[theorem](g, cache)


def _check_n_max(n_max: int, low: int) -> None:
    if not low <= n_max <= MAX_ENUMERATION_N:
        raise BudgetError(f"n_max must lie in {low}..{MAX_ENUMERATION_N}, got {n_max}")


# ---------------------------------------------------------------------------
# contraction conjecture
# ---------------------------------------------------------------------------


@dataclass
class ConjectureReport:
    n_max: int
    scanned: dict[int, int] = field(default_factory=dict)
    pairs_checked: int = 0
    skipped: int = 0
    counterexamples: list[VerificationRecord] = field(default_factory=list)

    @property
    def graphs_scanned(self) -> int:
        return sum(self.scanned.values())

    def to_json(self) -> dict[str, Any]:
        return {
            "n_max": self.n_max,
            "scanned": {str(n): c for n, c in sorted(self.scanned.items())},
            "graphs_scanned": self.graphs_scanned,
            "pairs_checked": self.pairs_checked,
            "skipped": self.skipped,
            "counterexamples": [r.to_json() for r in self.counterexamples],
        }


def _conjecture_unit(unit: tuple[int, int, int]) -> tuple[int, int, int, int, list[VerificationRecord]]:
    n, start, stop = unit
    cache = worker_cache()
    graphs = pairs = skipped = 0
    found = []
    for g in enumerate_connected_graphs(n, start, stop):
        graphs += 1
        for rec in records_for("contraction_conjecture", g, cache):
            if rec.skip:
                skipped += 1
                continue
            pairs += 1
            if rec.violated:
                found.append(rec)
    return n, graphs, pairs, skipped, found


def search_conjecture(n_max: int, workers: int = 1) -> ConjectureReport:
    """Every (G, e) with chi_dom(G/e) < chi_dom(G) - 1 over all labeled
    connected graphs on 3..n_max vertices, each oracle-confirmed."""
    _check_n_max(n_max, 3)
    report = ConjectureReport(n_max, {n: 0 for n in range(3, n_max + 1)})
    for n, graphs, pairs, skipped, found in run_units(_conjecture_unit, enumeration_units(3, n_max), workers):
        report.scanned[n] += graphs
        report.pairs_checked += pairs
        report.skipped += skipped
        report.counterexamples += found
    report.counterexamples.sort(key=VerificationRecord.sort_key)
    return report


# ---------------------------------------------------------------------------
# sharpness witnesses
# ---------------------------------------------------------------------------


def find_sharpness_witnesses(
    theorem: str,
    bound: str,
    n_max: int,
    cache: ValueCache | None = None,
    smallest_only: bool = False,
    n_min: int = 2,
) -> list[VerificationRecord]:
    """Records meeting ``bound`` of ``theorem`` with equality, over labeled
    connected graphs on n_min..n_max vertices, in enumeration order.

    With ``smallest_only`` the scan stops after the first vertex count that
    produces any witness.
    """
    names = SHARPNESS_BOUNDS.get(theorem)
    if names is None or bound not in names:
        raise ArgumentError(f"no {bound!r} bound to test for {theorem!r}")
    _check_n_max(n_max, 1)
    cache = cache or ValueCache()
    name = names[bound]
    out = []
    for n in range(n_min, n_max + 1):
        for g in enumerate_connected_graphs(n):
            for rec in records_for(theorem, g, cache):
                if rec.skip is None and rec.bound(name).tight:
                    out.append(rec)
        if smallest_only and out:
            break
    return out
