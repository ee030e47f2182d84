"""Labeled enumeration of connected graphs for exhaustive checks.

Vertex pairs are indexed lexicographically, (0,1), (0,2), ..., (n-2,n-1);
edge set number ``i`` has pair ``p`` present iff bit ``p`` of ``i`` is set.
Graphs are produced in increasing edge-set number, so any index window
``[start, stop)`` is a self-contained slice of the stream that a worker can
process on its own.
"""

from __future__ import annotations

from typing import Iterator

from .errors import BudgetError
from .graph import Graph

MAX_ENUMERATION_N = 7


def vertex_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def edge_set_count(n: int) -> int:
    """Number of edge-set indices for ``n`` vertices (2^(n choose 2))."""
    return 1 << (n * (n - 1) // 2)


def graph_from_index(n: int, index: int) -> Graph:
    masks = [0] * n
    for p, (u, v) in enumerate(vertex_pairs(n)):
        if (index >> p) & 1:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
    return Graph(n, tuple(masks))


def enumerate_connected_graphs(n: int, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """Yield each connected labeled graph on ``n`` vertices exactly once.

    ``start``/``stop`` restrict the scan to a window of edge-set indices.
    """
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise BudgetError(f"labeled enumeration supports 1 <= n <= {MAX_ENUMERATION_N}, got {n}")
    total = edge_set_count(n)
    stop = total if stop is None else min(stop, total)
    pairs = vertex_pairs(n)
    full = (1 << n) - 1
    for index in range(start, stop):
        # connected needs at least n-1 edges
        if index.bit_count() < n - 1:
            continue
        masks = [0] * n
        x = index
        while x:
            low = x & -x
            u, v = pairs[low.bit_length() - 1]
            masks[u] |= 1 << v
            masks[v] |= 1 << u
            x ^= low
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            y = frontier
            while y:
                low = y & -y
                nxt |= masks[low.bit_length() - 1]
                y ^= low
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        if seen == full:
            yield _trusted(n, masks)


def _trusted(n: int, masks: list[int]) -> Graph:
    # Masks built here are symmetric and loop-free by construction; skip
    # the O(m) validation in Graph.__post_init__.
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "masks", tuple(masks))
    return g


def count_connected_graphs(n: int) -> int:
    return sum(1 for _ in enumerate_connected_graphs(n))
