"""Instance-parallel execution over slices of the labeled enumeration."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

from ..enumeration import edge_set_count
from .checks import ValueCache

T = TypeVar("T")
U = TypeVar("U")

_worker_cache: ValueCache | None = None


def worker_cache(oracle_max_vertices: int | None = None) -> ValueCache:
    """Per-process cache; each worker owns its own solver state."""
    global _worker_cache
    if _worker_cache is None or (
        oracle_max_vertices is not None and _worker_cache.oracle_max_vertices != oracle_max_vertices
    ):
        _worker_cache = ValueCache() if oracle_max_vertices is None else ValueCache(oracle_max_vertices=oracle_max_vertices)
    return _worker_cache


def default_jobs() -> int:
    env = os.environ.get("DOMCHROM_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def enumeration_units(n_min: int, n_max: int, chunks_per_n: int = 16) -> list[tuple[int, int, int]]:
    """``(n, start, stop)`` windows covering every edge-set index for each n."""
    units = []
    for n in range(n_min, n_max + 1):
        total = edge_set_count(n)
        parts = min(chunks_per_n, total)
        step = -(-total // parts)
        units += [(n, lo, min(lo + step, total)) for lo in range(0, total, step)]
    return units


def run_units(fn: Callable[[T], U], units: Iterable[T], workers: int) -> list[U]:
    """Map ``fn`` over ``units`` preserving order; in-process when workers <= 1."""
    units = list(units)
    if workers <= 1 or len(units) <= 1:
        return [fn(u) for u in units]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, units))
