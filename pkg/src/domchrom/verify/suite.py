"""Suite runner: configured theorem checks over enumerated or supplied graphs,
merged into one deterministic report."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable

from .. import __version__
from ..chromatic import ORACLE_MAX_VERTICES
from ..graph import Graph, complete_graph, cycle_graph, path_graph, star_graph
from ..graph6 import parse_graph6, read_graph6_file, write_graph6
from ..enumeration import enumerate_connected_graphs
from ..errors import ArgumentError
from .checks import (
    ValueCache,
    check_corollaries,
    check_edge_contraction,
    check_edge_deletion,
    check_odot,
    check_odot_ratio,
    check_path_cycle_formula,
    check_subdivision,
    check_vertex_contraction,
    check_vertex_deletion,
    check_wheel_equality,
    check_wheel_gap,
)
from .parallel import enumeration_units, run_units, worker_cache
from .records import THEOREMS, VerificationRecord

PER_GRAPH = (
    "edge_deletion",
    "vertex_deletion",
    "wheel_equality",
    "edge_contraction",
    "contraction_conjecture",
    "vertex_contraction",
    "corollary_edge",
    "corollary_vertex",
    "odot",
)
SUBDIVISION = ("subdivision_frac", "subdivision_dfrac")


def default_subdivision_graphs() -> list[Graph]:
    """P_3, K_3, K_{1,3}, C_4, K_4 and K_{1,2}."""
    return [path_graph(3), complete_graph(3), star_graph(3), cycle_graph(4), complete_graph(4), star_graph(2)]


@dataclass
class SuiteConfig:
    n_max: int = 6
    theorems: tuple[str, ...] = THEOREMS
    corpus: str | None = None
    graphs: tuple[str, ...] = ()
    k_min: int = 2
    k_max: int = 5
    cap_vertices: int = 20
    formula_range: tuple[int, int] = (3, 12)
    wheel_range: tuple[int, int] = (4, 16)
    ratio_range: tuple[int, int] = (3, 10)
    records: str = "all"
    oracle_cap: int = ORACLE_MAX_VERTICES
    workers: int = field(default=1, compare=False)

    def __post_init__(self) -> None:
        unknown = set(self.theorems) - set(THEOREMS)
        if unknown:
            raise ArgumentError(f"unknown theorem id(s): {sorted(unknown)}")
        if self.records not in ("all", "findings"):
            raise ArgumentError("records must be 'all' or 'findings'")
        self.theorems = tuple(t for t in THEOREMS if t in self.theorems)

    def echo(self) -> dict[str, Any]:
        data = asdict(self)
        del data["workers"]
        data["theorems"] = list(self.theorems)
        data["graphs"] = list(self.graphs)
        for key in ("formula_range", "wheel_range", "ratio_range"):
            data[key] = list(data[key])
        return data


class Tally:
    def __init__(self) -> None:
        self.per_theorem: dict[str, dict[str, Any]] = {}

    def _row(self, theorem: str) -> dict[str, Any]:
        return self.per_theorem.setdefault(
            theorem, {"checked": 0, "violations": 0, "tight": 0, "skipped": 0, "skipped_by_reason": {}}
        )

    def add(self, rec: VerificationRecord) -> None:
        row = self._row(rec.theorem)
        if rec.skip is not None:
            row["skipped"] += 1
            row["skipped_by_reason"][rec.skip] = row["skipped_by_reason"].get(rec.skip, 0) + 1
            return
        row["checked"] += 1
        row["violations"] += rec.violated
        row["tight"] += bool(rec.tight)

    def merge(self, other: Tally) -> None:
        for th, row in other.per_theorem.items():
            mine = self._row(th)
            for key in ("checked", "violations", "tight", "skipped"):
                mine[key] += row[key]
            for reason, c in row["skipped_by_reason"].items():
                mine["skipped_by_reason"][reason] = mine["skipped_by_reason"].get(reason, 0) + c

    def summary(self) -> dict[str, Any]:
        totals = {key: sum(r[key] for r in self.per_theorem.values()) for key in ("checked", "violations", "tight", "skipped")}
        per = {}
        for th in THEOREMS:
            if th in self.per_theorem:
                row = dict(self.per_theorem[th])
                row["skipped_by_reason"] = dict(sorted(row["skipped_by_reason"].items()))
                per[th] = row
        return {**totals, "per_theorem": per}


@dataclass
class SuiteReport:
    config: SuiteConfig
    records: list[VerificationRecord]
    summary: dict[str, Any]
    elapsed: float = 0.0

    @property
    def violations(self) -> int:
        return self.summary["violations"]

    def body(self) -> dict[str, Any]:
        """Report content that must not depend on timing or worker count."""
        return {
            "tool": {"name": "domchrom", "version": __version__},
            "config": self.config.echo(),
            "records": [r.to_json() for r in self.records],
            "summary": self.summary,
        }

    def to_json(self) -> dict[str, Any]:
        return {**self.body(), "runtime": {"elapsed": round(self.elapsed, 3), "workers": self.config.workers}}

    def body_text(self) -> str:
        return json.dumps(self.body(), sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["theorem", "checked", "violations", "tight", "skipped"])
        for th, row in self.summary["per_theorem"].items():
            w.writerow([th, row["checked"], row["violations"], row["tight"], row["skipped"]])
        return buf.getvalue()


def graph_records(g: Graph, theorems: Iterable[str], cache: ValueCache) -> list[VerificationRecord]:
    """Records of every selected per-graph theorem on ``g``."""
    theorems = set(theorems)
    out: list[VerificationRecord] = []
    if "edge_deletion" in theorems:
        out += check_edge_deletion(g, cache)
    if "vertex_deletion" in theorems:
        out += check_vertex_deletion(g, cache)
    if "wheel_equality" in theorems and g.is_connected():
        rec = check_wheel_equality(g, cache)
        if rec is not None:
            out.append(rec)
    if theorems & {"edge_contraction", "contraction_conjecture"}:
        out += [r for r in check_edge_contraction(g, cache) if r.theorem in theorems]
    if "vertex_contraction" in theorems:
        out += check_vertex_contraction(g, cache)
    if theorems & {"corollary_edge", "corollary_vertex"}:
        out += [r for r in check_corollaries(g, cache) if r.theorem in theorems]
    if "odot" in theorems:
        out += check_odot(g, cache)
    return out


def _graph_unit(unit: tuple[tuple[str, ...], str, tuple, str, int]) -> tuple[Tally, list[VerificationRecord]]:
    theorems, source, payload, mode, oracle_cap = unit
    cache = worker_cache(oracle_cap)
    if source == "enum":
        graphs: Iterable[Graph] = enumerate_connected_graphs(*payload)
    else:
        graphs = (parse_graph6(s) for s in payload)
    tally = Tally()
    kept = []
    for g in graphs:
        for rec in graph_records(g, theorems, cache):
            tally.add(rec)
            if mode == "all" or rec.violated:
                kept.append(rec)
    return tally, kept


def _chunks(items: list[str], parts: int) -> list[tuple[str, ...]]:
    step = max(1, -(-len(items) // max(1, parts)))
    return [tuple(items[i : i + step]) for i in range(0, len(items), step)]


def run_suite(config: SuiteConfig) -> SuiteReport:
    t0 = time.perf_counter()
    tally = Tally()
    records: list[VerificationRecord] = []

    def keep(recs: Iterable[VerificationRecord]) -> None:
        for rec in recs:
            tally.add(rec)
            if config.records == "all" or rec.violated:
                records.append(rec)

    explicit = list(config.graphs)
    if config.corpus:
        explicit += [write_graph6(g) for g in read_graph6_file(config.corpus)]

    per_graph = tuple(t for t in config.theorems if t in PER_GRAPH)
    if per_graph:
        if explicit:
            units = [
                (per_graph, "list", chunk, config.records, config.oracle_cap)
                for chunk in _chunks(explicit, 4 * config.workers)
            ]
        else:
            units = [
                (per_graph, "enum", u, config.records, config.oracle_cap) for u in enumeration_units(2, config.n_max)
            ]
        for part, kept in run_units(_graph_unit, units, config.workers):
            tally.merge(part)
            records += kept

    cache = ValueCache(oracle_max_vertices=config.oracle_cap)
    if "path_cycle_formula" in config.theorems:
        keep(check_path_cycle_formula(*config.formula_range, cache))
    if "wheel_gap" in config.theorems:
        lo, hi = config.wheel_range
        keep(check_wheel_gap(hi, cache, n_min=lo))
    if "odot_ratio" in config.theorems:
        lo, hi = config.ratio_range
        keep(check_odot_ratio(hi, cache, n_min=lo))
    wanted = [t for t in SUBDIVISION if t in config.theorems]
    if wanted:
        bases = [parse_graph6(s) for s in explicit] if explicit else default_subdivision_graphs()
        for g in bases:
            for k in range(config.k_min, config.k_max + 1):
                keep(r for r in check_subdivision(g, k, cache, config.cap_vertices) if r.theorem in wanted)

    records.sort(key=VerificationRecord.sort_key)
    return SuiteReport(config, records, tally.summary(), time.perf_counter() - t0)
