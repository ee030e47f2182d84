"""Colorings, certificates and the validity checkers.

The checkers work from plain neighbor sets and share no code with the
search kernels in :mod:`domchrom.chromatic.solver`; the brute-force oracle
relies on that separation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence, Union

from ..errors import ArgumentError, DomainError
from ..graph import Graph


@dataclass(frozen=True)
class Coloring:
    """Colors ``1..k`` per vertex, every color used at least once."""

    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        used = set(self.colors)
        if used and used != set(range(1, max(used) + 1)):
            raise ArgumentError(f"colors must be exactly 1..k with no gaps, got {sorted(used)}")

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    def classes(self) -> list[list[int]]:
        """``classes()[i]`` is the sorted member list of color ``i + 1``."""
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c - 1].append(v)
        return out

    @classmethod
    def canonical(cls, assignment: Sequence[int]) -> Coloring:
        """Relabel arbitrary labels to 1, 2, ... in first-occurrence order."""
        relabel: dict[int, int] = {}
        for c in assignment:
            if c not in relabel:
                relabel[c] = len(relabel) + 1
        return cls(tuple(relabel[c] for c in assignment))

    def is_canonical(self) -> bool:
        return Coloring.canonical(self.colors) == self


ColoringLike = Union[Coloring, Sequence[int]]


def _colors_of(g: Graph, c: ColoringLike) -> tuple:
    colors = c.colors if isinstance(c, Coloring) else tuple(c)
    if len(colors) != g.n or any(x is None for x in colors):
        raise ArgumentError(f"coloring must assign a color to each of the {g.n} vertices")
    return colors


def _neighbor_sets(g: Graph) -> list[set[int]]:
    return [set(g.neighbors(v)) for v in range(g.n)]


def _class_map(colors: tuple) -> dict:
    classes: dict = {}
    for v, col in enumerate(colors):
        classes.setdefault(col, set()).add(v)
    return classes


def is_proper(g: Graph, c: ColoringLike) -> bool:
    colors = _colors_of(g, c)
    return all(colors[u] != colors[v] for u, v in g.edges())


def find_dominators(g: Graph, c: ColoringLike) -> dict | None:
    """Smallest dominating vertex per color, or ``None`` if ``c`` is not a
    dominated coloring of ``g``."""
    colors = _colors_of(g, c)
    if not all(colors[u] != colors[v] for u, v in g.edges()):
        return None
    nbrs = _neighbor_sets(g)
    dominators = {}
    for col, members in _class_map(colors).items():
        w = next((w for w in range(g.n) if members <= nbrs[w]), None)
        if w is None:
            return None
        dominators[col] = w
    return dominators


def is_dominated_coloring(g: Graph, c: ColoringLike) -> bool:
    """Proper, and every color class lies inside the open neighborhood of
    some vertex."""
    return find_dominators(g, c) is not None


def find_td_witnesses(g: Graph, c: ColoringLike) -> dict[int, Any] | None:
    """Per vertex, the smallest color whose class lies inside its open
    neighborhood; ``None`` if ``c`` is not a total dominator coloring."""
    colors = _colors_of(g, c)
    if g.has_isolated_vertex():
        raise DomainError("total dominator coloring is undefined with isolated vertices")
    if not all(colors[u] != colors[v] for u, v in g.edges()):
        return None
    nbrs = _neighbor_sets(g)
    classes = sorted(_class_map(colors).items())
    witnesses = {}
    for v in range(g.n):
        col = next((col for col, members in classes if members <= nbrs[v]), None)
        if col is None:
            return None
        witnesses[v] = col
    return witnesses


def is_total_dominator_coloring(g: Graph, c: ColoringLike) -> bool:
    return find_td_witnesses(g, c) is not None


@dataclass(frozen=True)
class ProperColoringCertificate:
    coloring: Coloring

    def is_valid(self, g: Graph) -> bool:
        return is_proper(g, self.coloring)

    def to_json(self) -> dict[str, Any]:
        return {"k": self.coloring.k, "colors": list(self.coloring.colors)}


@dataclass(frozen=True)
class DominatedColoringCertificate:
    """``dominators[i]`` dominates color ``i + 1``."""

    coloring: Coloring
    dominators: tuple[int, ...]

    @classmethod
    def from_coloring(cls, g: Graph, coloring: Coloring) -> DominatedColoringCertificate:
        doms = find_dominators(g, coloring)
        if doms is None:
            raise ArgumentError("coloring is not a dominated coloring")
        return cls(coloring, tuple(doms[c] for c in range(1, coloring.k + 1)))

    def is_valid(self, g: Graph) -> bool:
        if len(self.dominators) != self.coloring.k or not is_proper(g, self.coloring):
            return False
        return all(
            all(g.has_edge(w, v) for v in members)
            for w, members in zip(self.dominators, self.coloring.classes())
        )

    def to_json(self) -> dict[str, Any]:
        return {"k": self.coloring.k, "colors": list(self.coloring.colors), "dominators": list(self.dominators)}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> DominatedColoringCertificate:
        return cls(Coloring(tuple(data["colors"])), tuple(data["dominators"]))


@dataclass(frozen=True)
class TotalDominatorCertificate:
    """``witnesses[v]`` is a color whose whole class lies in N(v)."""

    coloring: Coloring
    witnesses: tuple[int, ...]

    @classmethod
    def from_coloring(cls, g: Graph, coloring: Coloring) -> TotalDominatorCertificate:
        wit = find_td_witnesses(g, coloring)
        if wit is None:
            raise ArgumentError("coloring is not a total dominator coloring")
        return cls(coloring, tuple(wit[v] for v in range(g.n)))

    def is_valid(self, g: Graph) -> bool:
        if len(self.witnesses) != g.n or not is_proper(g, self.coloring):
            return False
        classes = self.coloring.classes()
        for v, col in enumerate(self.witnesses):
            if not 1 <= col <= len(classes):
                return False
            if not all(g.has_edge(v, u) for u in classes[col - 1]):
                return False
        return True

    def to_json(self) -> dict[str, Any]:
        return {"k": self.coloring.k, "colors": list(self.coloring.colors), "witnesses": list(self.witnesses)}
