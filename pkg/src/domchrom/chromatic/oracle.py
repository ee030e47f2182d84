"""Brute-force chi_dom for small graphs.

Enumerates every restricted-growth assignment (each vertex takes a color at
most one above the largest color used by lower-numbered vertices) and asks
the set-based checker.  Slow by design, and independent of the search kernel.
"""

from __future__ import annotations

from typing import Iterator

from ..errors import BudgetError, DomainError
from ..graph import Graph
from .coloring import is_dominated_coloring

ORACLE_MAX_VERTICES = 8


def restricted_growth_strings(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All canonical assignments of ``n`` vertices to colors 1..k."""
    a = [0] * n

    def rec(i: int, top: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(a)
            return
        for c in range(1, min(top + 1, k) + 1):
            a[i] = c
            yield from rec(i + 1, max(top, c))

    yield from rec(0, 0)


def oracle_dominated_chromatic(g: Graph, max_vertices: int = ORACLE_MAX_VERTICES) -> int:
    if g.n > max_vertices:
        raise BudgetError(f"oracle budget is {max_vertices} vertices, graph has {g.n}")
    if g.n == 0 or g.has_isolated_vertex():
        raise DomainError("chi_dom is undefined for graphs with an isolated vertex")
    for k in range(1, g.n + 1):
        if any(is_dominated_coloring(g, a) for a in restricted_growth_strings(g.n, k)):
            return k
    raise AssertionError("singleton classes always form a dominated coloring")
