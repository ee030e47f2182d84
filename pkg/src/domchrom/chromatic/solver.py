"""Exact solvers for chi, chi_dom and chi_d^t.

All three share one skeleton: iterative deepening on the color count k from
a lower bound, depth-first assignment of vertices in descending-degree order
(ties by id), and color symmetry breaking where a vertex may only open color
``used + 1``.  They differ in the feasibility state kept per color class.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from ..errors import ArgumentError, BudgetError, DomainError
from ..graph import Graph, iter_bits, popcount
from .coloring import (
    Coloring,
    DominatedColoringCertificate,
    ProperColoringCertificate,
    TotalDominatorCertificate,
)

DEFAULT_MAX_VERTICES = 40


@dataclass
class SearchStats:
    nodes: int = 0
    decisions: int = 0
    elapsed: float = 0.0

    def to_json(self) -> dict[str, Any]:
        return {"nodes": self.nodes, "decisions": self.decisions, "elapsed": round(self.elapsed, 6)}


@dataclass(frozen=True)
class SolveResult:
    value: int
    certificate: Any
    stats: SearchStats = field(compare=False)

    def to_json(self) -> dict[str, Any]:
        return {"value": self.value, "certificate": self.certificate.to_json(), "stats": self.stats.to_json()}


def branching_order(g: Graph) -> list[int]:
    degs = g.degrees()
    return sorted(range(g.n), key=lambda v: (-degs[v], v))


def greedy_clique_bound(g: Graph) -> int:
    """Size of the best greedy clique grown from each vertex."""
    best = 1 if g.n else 0
    degs = g.degrees()
    for start in range(g.n):
        size = 1
        cand = g.masks[start]
        while cand:
            w = max(iter_bits(cand), key=lambda u: (popcount(g.masks[u] & cand), -u))
            size += 1
            cand &= g.masks[w]
        best = max(best, size)
        if best == max(degs) + 1:
            break
    return best


def _check_budget(g: Graph, max_vertices: int) -> None:
    if g.n == 0:
        raise ArgumentError("graph has no vertices")
    if g.n > max_vertices:
        raise BudgetError(f"solver budget is {max_vertices} vertices, graph has {g.n}")


def _deepen(g: Graph, lower: int, attempt: Callable[[int, SearchStats], Optional[list[int]]]) -> tuple[int, Coloring, SearchStats]:
    stats = SearchStats()
    t0 = time.perf_counter()
    for k in range(max(lower, 1), g.n + 1):
        colors = attempt(k, stats)
        if colors is not None:
            stats.elapsed = time.perf_counter() - t0
            return k, Coloring.canonical(colors), stats
    raise AssertionError("no coloring found with n colors")  # unreachable for valid inputs


# ---------------------------------------------------------------------------
# chi
# ---------------------------------------------------------------------------


def _proper_attempt(g: Graph) -> Callable[[int, SearchStats], Optional[list[int]]]:
    order = branching_order(g)
    masks = g.masks
    n = g.n

    def attempt(k: int, stats: SearchStats) -> Optional[list[int]]:
        colors = [0] * n
        members = [0] * k

        def dfs(pos: int, used: int) -> bool:
            stats.nodes += 1
            if pos == n:
                return True
            v = order[pos]
            nb = masks[v]
            for c in range(min(used + 1, k)):
                if members[c] & nb:
                    continue
                stats.decisions += 1
                colors[v] = c + 1
                members[c] |= 1 << v
                if dfs(pos + 1, max(used, c + 1)):
                    return True
                members[c] &= ~(1 << v)
            colors[v] = 0
            return False

        return colors if dfs(0, 0) else None

    return attempt


def chromatic_number(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> SolveResult:
    _check_budget(g, max_vertices)
    k, coloring, stats = _deepen(g, greedy_clique_bound(g), _proper_attempt(g))
    return SolveResult(k, ProperColoringCertificate(coloring), stats)


# ---------------------------------------------------------------------------
# chi_dom
# ---------------------------------------------------------------------------


def _dominated_attempt(g: Graph) -> Callable[[int, SearchStats], Optional[list[int]]]:
    order = branching_order(g)
    masks = g.masks
    n = g.n
    # suffix[pos]: vertices not yet assigned when order[pos] is next
    suffix = [0] * (n + 1)
    for pos in range(n - 1, -1, -1):
        suffix[pos] = suffix[pos + 1] | (1 << order[pos])

    def attempt(k: int, stats: SearchStats) -> Optional[list[int]]:
        colors = [0] * n
        members = [0] * k  # vertices in each class
        blocked = [0] * k  # union of neighborhoods of class members
        cand = [0] * k  # vertices whose neighborhood contains the whole class

        def capacity_ok(pos: int, used: int) -> bool:
            # Every class is an independent subset of some N(w).  Bound how
            # many unassigned vertices the classes could still absorb.
            free = suffix[pos]
            need = popcount(free)
            total = 0
            for c in range(used):
                room = free & ~blocked[c]
                best = 0
                for w in iter_bits(cand[c]):
                    r = popcount(masks[w] & room)
                    if r > best:
                        best = r
                total += best
                if total >= need:
                    return True
            if used < k:
                best = max(popcount(masks[w] & free) for w in range(n))
                total += (k - used) * best
            return total >= need

        def dfs(pos: int, used: int) -> bool:
            stats.nodes += 1
            if pos == n:
                return True
            if not capacity_ok(pos, used):
                return False
            v = order[pos]
            nb = masks[v]
            bit = 1 << v
            for c in range(used):
                if members[c] & nb:
                    continue
                narrowed = cand[c] & nb
                if not narrowed:
                    continue
                stats.decisions += 1
                saved = cand[c], blocked[c]
                colors[v] = c + 1
                members[c] |= bit
                blocked[c] |= nb
                cand[c] = narrowed
                if dfs(pos + 1, used):
                    return True
                members[c] &= ~bit
                cand[c], blocked[c] = saved
            if used < k:
                stats.decisions += 1
                colors[v] = used + 1
                members[used] = bit
                blocked[used] = nb
                cand[used] = nb
                if dfs(pos + 1, used + 1):
                    return True
                members[used] = blocked[used] = cand[used] = 0
            colors[v] = 0
            return False

        return colors if dfs(0, 0) else None

    return attempt


def dominated_lower_bound(g: Graph) -> int:
    """max(greedy clique, ceil(n / max degree)): each class sits inside one
    open neighborhood, so holds at most max-degree vertices."""
    delta = g.max_degree()
    return max(greedy_clique_bound(g), -(-g.n // delta))


def dominated_chromatic_number(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> SolveResult:
    _check_budget(g, max_vertices)
    if g.has_isolated_vertex():
        raise DomainError("chi_dom is undefined for graphs with an isolated vertex")
    k, coloring, stats = _deepen(g, dominated_lower_bound(g), _dominated_attempt(g))
    return SolveResult(k, DominatedColoringCertificate.from_coloring(g, coloring), stats)


# ---------------------------------------------------------------------------
# chi_d^t
# ---------------------------------------------------------------------------


def _td_attempt(g: Graph) -> Callable[[int, SearchStats], Optional[list[int]]]:
    order = branching_order(g)
    masks = g.masks
    n = g.n
    suffix = [0] * (n + 1)
    for pos in range(n - 1, -1, -1):
        suffix[pos] = suffix[pos + 1] | (1 << order[pos])

    def attempt(k: int, stats: SearchStats) -> Optional[list[int]]:
        colors = [0] * n
        members = [0] * k

        def witnesses_possible(pos: int, used: int) -> bool:
            # Classes only grow, so a vertex with no class inside N(x) now
            # can only be rescued by a class not opened yet.
            free = suffix[pos]
            for x in range(n):
                nx = masks[x]
                if any(not (members[c] & ~nx) for c in range(used)):
                    continue
                if used == k or not (nx & free):
                    return False
            return True

        def dfs(pos: int, used: int) -> bool:
            stats.nodes += 1
            if not witnesses_possible(pos, used):
                return False
            if pos == n:
                return True
            v = order[pos]
            nb = masks[v]
            for c in range(min(used + 1, k)):
                if members[c] & nb:
                    continue
                stats.decisions += 1
                colors[v] = c + 1
                members[c] |= 1 << v
                if dfs(pos + 1, max(used, c + 1)):
                    return True
                members[c] &= ~(1 << v)
            colors[v] = 0
            return False

        return colors if dfs(0, 0) else None

    return attempt


def total_dominator_chromatic_number(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> SolveResult:
    _check_budget(g, max_vertices)
    if g.has_isolated_vertex():
        raise DomainError("chi_d^t is undefined for graphs with an isolated vertex")
    k, coloring, stats = _deepen(g, max(2, greedy_clique_bound(g)), _td_attempt(g))
    return SolveResult(k, TotalDominatorCertificate.from_coloring(g, coloring), stats)
