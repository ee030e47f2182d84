"""Simple undirected graphs on vertices 0..n-1, named families and structure.

Adjacency is held as one integer bitmask per vertex: bit ``u`` of
``masks[v]`` is set iff ``u`` and ``v`` are adjacent.  Every search kernel in
the package works directly on these masks.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import ArgumentError, ParameterError

Edge = tuple[int, int]


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    Construct with :meth:`from_edges` unless you already have validated
    masks.  Equality and hashing are by labeled structure.
    """

    n: int
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.masks) != self.n:
            raise ArgumentError(f"expected {self.n} adjacency masks, got {len(self.masks)}")
        full = (1 << self.n) - 1
        for v, m in enumerate(self.masks):
            if m & ~full:
                raise ArgumentError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if (m >> v) & 1:
                raise ArgumentError(f"self-loop at vertex {v}")
            for u in iter_bits(m):
                if not (self.masks[u] >> v) & 1:
                    raise ArgumentError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        """Build a graph; repeated edges are merged, loops are rejected."""
        masks = [0] * n
        for u, v in edges:
            if u == v:
                raise ArgumentError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ArgumentError(f"edge ({u}, {v}) outside 0..{n - 1}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, tuple(masks))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool((self.masks[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.masks[v]))

    def degree(self, v: int) -> int:
        return popcount(self.masks[v])

    def degrees(self) -> list[int]:
        return [popcount(m) for m in self.masks]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.masks[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(popcount(x) for x in self.masks) // 2

    def has_isolated_vertex(self) -> bool:
        return any(x == 0 for x in self.masks)

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ArgumentError("relabeling must be a permutation of 0..n-1")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return self.component_mask(0) == self.full_mask

    def component_mask(self, start: int, removed: int = 0) -> int:
        """Bitmask of vertices reachable from ``start`` avoiding ``removed``."""
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.masks[v]
            nxt &= ~seen & ~removed
            seen |= nxt
            frontier = nxt
        return seen

    def count_components(self) -> int:
        left = self.full_mask
        count = 0
        while left:
            comp = self.component_mask((left & -left).bit_length() - 1)
            left &= ~comp
            count += 1
        return count

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

FAMILY_MINIMUM = {"path": 1, "cycle": 3, "complete": 1, "star": 1, "wheel": 3}


@dataclass(frozen=True)
class FamilySpec:
    """A named family member.

    ``n`` is the vertex count for path/cycle/complete, the leaf count for
    ``star`` (K_{1,n}, n+1 vertices) and the rim length for ``wheel``
    (n+1 vertices).
    """

    kind: str
    n: int

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_MINIMUM:
            raise ParameterError(f"unknown family {self.kind!r}; expected one of {sorted(FAMILY_MINIMUM)}")
        if self.n < FAMILY_MINIMUM[self.kind]:
            raise ParameterError(f"{self.kind} needs n >= {FAMILY_MINIMUM[self.kind]}, got {self.n}")

    def __str__(self) -> str:
        return f"{self.kind}:{self.n}"


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def wheel_graph(rim: int) -> Graph:
    """Rim cycle on 0..rim-1 plus hub ``rim`` adjacent to every rim vertex."""
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return Graph.from_edges(rim + 1, edges)


def make_family(spec: FamilySpec) -> Graph:
    builders = {
        "path": path_graph,
        "cycle": cycle_graph,
        "complete": complete_graph,
        "star": star_graph,
        "wheel": wheel_graph,
    }
    return builders[spec.kind](spec.n)


def star_on_vertices(n: int) -> Graph:
    """The star S_n on n vertices (center 0 and n-1 leaves)."""
    if n < 2:
        raise ParameterError("S_n needs n >= 2")
    return star_graph(n - 1)


# ---------------------------------------------------------------------------
# Structure
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StructureReport:
    connected: bool
    bridges: frozenset[Edge]
    cut_vertices: frozenset[int]
    degrees: tuple[int, ...]
    max_degree: int = field(default=0)


def _lowpoint(g: Graph) -> tuple[set[Edge], set[int]]:
    """Bridges and articulation points in one iterative DFS pass."""
    disc = [-1] * g.n
    low = [0] * g.n
    bridges: set[Edge] = set()
    cuts: set[int] = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    bridges.add((min(parent, v), max(parent, v)))
                if parent != root and low[v] >= disc[parent]:
                    cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return bridges, cuts


def structure(g: Graph) -> StructureReport:
    bridges, cuts = _lowpoint(g)
    degs = tuple(g.degrees())
    return StructureReport(
        connected=g.is_connected(),
        bridges=frozenset(bridges),
        cut_vertices=frozenset(cuts),
        degrees=degs,
        max_degree=max(degs, default=0),
    )
