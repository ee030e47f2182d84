"""Vertex and edge modifications: deletion, contraction, the odot operation,
and k-subdivision.

Operations that remove a vertex renumber survivors to 0..n'-1 in ascending
original order and return the map ``old id -> new id`` alongside the graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import ArgumentError
from .graph import Edge, Graph, iter_bits

OPERATION_KINDS = (
    "delete_edge",
    "delete_vertex",
    "contract_edge",
    "contract_vertex",
    "odot_vertex",
    "subdivide",
)


@dataclass(frozen=True)
class OperationDescriptor:
    kind: str
    edge: Edge | None = None
    vertex: int | None = None
    k: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in OPERATION_KINDS:
            raise ArgumentError(f"unknown operation {self.kind!r}")
        if self.kind in ("delete_edge", "contract_edge"):
            if self.edge is None or self.vertex is not None or self.k is not None:
                raise ArgumentError(f"{self.kind} takes exactly one edge")
            u, v = self.edge
            object.__setattr__(self, "edge", (min(u, v), max(u, v)))
        elif self.kind == "subdivide":
            if self.k is None or self.edge is not None or self.vertex is not None:
                raise ArgumentError("subdivide takes exactly one k")
        elif self.vertex is None or self.edge is not None or self.k is not None:
            raise ArgumentError(f"{self.kind} takes exactly one vertex")

    def to_json(self) -> dict[str, Any]:
        if self.edge is not None:
            return {"kind": self.kind, "edge": list(self.edge)}
        if self.vertex is not None:
            return {"kind": self.kind, "vertex": self.vertex}
        return {"kind": self.kind, "k": self.k}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> OperationDescriptor:
        edge = data.get("edge")
        return cls(
            data["kind"],
            edge=tuple(edge) if edge is not None else None,
            vertex=data.get("vertex"),
            k=data.get("k"),
        )

    def sort_key(self) -> tuple:
        return (self.kind, self.edge or (), -1 if self.vertex is None else self.vertex, self.k or 0)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ArgumentError(f"vertex {v} not in graph on {g.n} vertices")


def _check_edge(g: Graph, e: Edge) -> tuple[int, int]:
    u, v = e
    if not g.has_edge(u, v):
        raise ArgumentError(f"edge ({u}, {v}) not in graph")
    return u, v


def _drop_vertex(masks: list[int], n: int, v: int) -> tuple[Graph, dict[int, int]]:
    """Remove vertex ``v`` from raw masks, shifting higher ids down by one."""
    low = (1 << v) - 1
    out = []
    for w in range(n):
        if w == v:
            continue
        m = masks[w]
        out.append((m & low) | ((m >> (v + 1)) << v))
    mapping = {w: (w if w < v else w - 1) for w in range(n) if w != v}
    return Graph(n - 1, tuple(out)), mapping


def delete_edge(g: Graph, e: Edge) -> Graph:
    u, v = _check_edge(g, e)
    masks = list(g.masks)
    masks[u] &= ~(1 << v)
    masks[v] &= ~(1 << u)
    return Graph(g.n, tuple(masks))


def delete_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    _check_vertex(g, v)
    if g.n < 2:
        raise ArgumentError("cannot delete the last remaining vertex")
    masks = [m & ~(1 << v) for m in g.masks]
    return _drop_vertex(masks, g.n, v)


def contract_edge(g: Graph, e: Edge) -> tuple[Graph, dict[int, int]]:
    """Merge the endpoints of ``e``; the merged vertex sits in the slot of
    the smaller endpoint and both endpoints map to it."""
    u, v = _check_edge(g, e)
    keep, gone = min(u, v), max(u, v)
    masks = list(g.masks)
    merged = (masks[keep] | masks[gone]) & ~(1 << keep) & ~(1 << gone)
    for w in iter_bits(masks[gone]):
        masks[w] &= ~(1 << gone)
    masks[gone] = 0
    for w in iter_bits(merged):
        masks[w] |= 1 << keep
    masks[keep] = merged
    out, mapping = _drop_vertex(masks, g.n, gone)
    mapping[gone] = mapping[keep]
    return out, dict(sorted(mapping.items()))


def contract_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """Delete ``v`` and make its open neighborhood a clique."""
    _check_vertex(g, v)
    if g.n < 2:
        raise ArgumentError("cannot contract the last remaining vertex")
    nb = g.masks[v]
    masks = [m & ~(1 << v) for m in g.masks]
    for w in iter_bits(nb):
        masks[w] |= nb & ~(1 << w)
    return _drop_vertex(masks, g.n, v)


def odot_vertex(g: Graph, v: int) -> Graph:
    """Remove every edge joining two neighbors of ``v``; ``v`` stays."""
    _check_vertex(g, v)
    nb = g.masks[v]
    masks = list(g.masks)
    for w in iter_bits(nb):
        masks[w] &= ~nb
    return Graph(g.n, tuple(masks))


@dataclass(frozen=True)
class SubdivisionLabeling:
    """``internal_vertex_map[(i, j, l)]`` is the id of the internal vertex at
    distance ``l`` from ``i`` on the superedge replacing edge ``i < j``."""

    k: int
    original_vertex_map: dict[int, int]
    internal_vertex_map: dict[tuple[int, int, int], int]

    def superedge(self, i: int, j: int) -> list[int]:
        """Vertex ids along the superedge from ``i`` to ``j``."""
        a, b = min(i, j), max(i, j)
        path = [self.original_vertex_map[a]]
        path += [self.internal_vertex_map[(a, b, l)] for l in range(1, self.k)]
        path.append(self.original_vertex_map[b])
        return path if i < j else path[::-1]


def subdivide(g: Graph, k: int) -> tuple[Graph, SubdivisionLabeling]:
    """Replace every edge by a path of length ``k``.

    Originals keep their ids; internal vertices follow, grouped by superedge
    in lexicographic edge order and by increasing distance from the smaller
    endpoint.
    """
    if k < 1:
        raise ArgumentError(f"subdivision needs k >= 1, got {k}")
    edges = g.edges()
    n_new = g.n + (k - 1) * len(edges)
    internal: dict[tuple[int, int, int], int] = {}
    new_edges = []
    nxt = g.n
    for i, j in edges:
        prev = i
        for l in range(1, k):
            internal[(i, j, l)] = nxt
            new_edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        new_edges.append((prev, j))
    labeling = SubdivisionLabeling(k, {v: v for v in range(g.n)}, internal)
    return Graph.from_edges(n_new, new_edges), labeling


def apply_operation(g: Graph, op: OperationDescriptor) -> tuple[Graph, dict[int, int] | SubdivisionLabeling | None]:
    """Dispatch on ``op.kind``; the second item is the renumbering map,
    the subdivision labeling, or ``None`` when ids are unchanged."""
    if op.kind == "delete_edge":
        return delete_edge(g, op.edge), None
    if op.kind == "delete_vertex":
        return delete_vertex(g, op.vertex)
    if op.kind == "contract_edge":
        return contract_edge(g, op.edge)
    if op.kind == "contract_vertex":
        return contract_vertex(g, op.vertex)
    if op.kind == "odot_vertex":
        return odot_vertex(g, op.vertex), None
    return subdivide(g, op.k)
