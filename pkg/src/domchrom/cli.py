"""Command-line entry point.

Exit status: 0 when every check passed, 1 on an operational error (bad
input, budget, I/O), 2 when a bound violation or conjecture counterexample
was found.  JSON goes to stdout (or --out); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Any

from . import __version__
from .chromatic import chromatic_number, dominated_chromatic_number, total_dominator_chromatic_number
from .errors import ArgumentError, DomChromError
from .graph import FamilySpec, Graph, make_family
from .graph6 import parse_graph6, read_graph6_file, write_graph6
from .ops import OPERATION_KINDS, OperationDescriptor, SubdivisionLabeling, apply_operation
from .verify import THEOREMS, SuiteConfig, find_sharpness_witnesses, run_suite, search_conjecture
from .verify.parallel import default_jobs
from .verify.search import SHARPNESS_BOUNDS

EXIT_OK, EXIT_ERROR, EXIT_FINDING = 0, 1, 2

_FAMILY_RE = re.compile(r"^(?P<kind>[a-z]+):(?P<n>\d+)(?:\^1/(?P<k>\d+))?$")
_OP_ALIASES = {"odot": "odot_vertex"}


class UsageError(DomChromError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse's own exit status 2 would read as a mathematical finding
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def parse_family(text: str) -> Graph:
    """``kind:n`` with optional ``^1/k`` for the k-subdivision, e.g. ``star:3^1/5``."""
    m = _FAMILY_RE.match(text.strip())
    if not m:
        raise UsageError(f"bad family spec {text!r}; expected kind:n or kind:n^1/k")
    g = make_family(FamilySpec(m["kind"], int(m["n"])))
    if m["k"] is not None:
        g, _ = apply_operation(g, OperationDescriptor("subdivide", k=int(m["k"])))
    return g


def _parse_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text.strip())
    if not m or int(m[1]) > int(m[2]):
        raise UsageError(f"bad range {text!r}; expected lo..hi")
    return int(m[1]), int(m[2])


def _input_graphs(args: argparse.Namespace) -> list[Graph]:
    graphs = [parse_graph6(s) for s in args.graph or []]
    graphs += [parse_family(s) for s in args.family or []]
    if getattr(args, "graphs_file", None):
        from_file = list(read_graph6_file(args.graphs_file))
        if args.index is not None:
            if not 0 <= args.index < len(from_file):
                raise UsageError(f"--index {args.index} outside file of {len(from_file)} graphs")
            from_file = [from_file[args.index]]
        graphs += from_file
    return graphs


def _single_graph(args: argparse.Namespace) -> Graph:
    graphs = _input_graphs(args)
    if len(graphs) != 1:
        raise UsageError(f"expected exactly one input graph, got {len(graphs)}")
    return graphs[0]


def _emit(args: argparse.Namespace, payload: dict[str, Any], plain: str, csv_text: str | None = None) -> None:
    if args.format == "json":
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        if csv_text is None:
            raise UsageError("csv output is only available for verify")
        text = csv_text
    else:
        text = plain.rstrip("\n") + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_solve(args: argparse.Namespace) -> int:
    g = _single_graph(args)
    solver = {
        "chi": chromatic_number,
        "chidom": dominated_chromatic_number,
        "chidt": total_dominator_chromatic_number,
    }[args.which]
    res = solver(g, max_vertices=args.cap_vertices)
    payload = {"graph": write_graph6(g), "which": args.which, **res.to_json()}
    plain = f"{args.which} = {res.value}\ncolors: {list(res.certificate.coloring.colors)}"
    _emit(args, payload, plain)
    return EXIT_OK


def _parse_descriptor(kind: str, arg: str | None) -> OperationDescriptor:
    kind = _OP_ALIASES.get(kind, kind)
    if kind not in OPERATION_KINDS:
        raise UsageError(f"unknown operation {kind!r}; expected one of {', '.join(OPERATION_KINDS)} (or odot)")
    if arg is None:
        raise UsageError(f"{kind} needs an argument")
    try:
        if kind in ("delete_edge", "contract_edge"):
            u, v = (int(x) for x in arg.split(","))
            return OperationDescriptor(kind, edge=(u, v))
        if kind == "subdivide":
            return OperationDescriptor(kind, k=int(arg))
        return OperationDescriptor(kind, vertex=int(arg))
    except ValueError as exc:
        if isinstance(exc, ArgumentError):
            raise
        raise UsageError(f"bad argument {arg!r} for {kind}") from exc


def cmd_op(args: argparse.Namespace) -> int:
    g = _single_graph(args)
    op = _parse_descriptor(args.kind, args.arg)
    h, extra = apply_operation(g, op)
    payload: dict[str, Any] = {"input": write_graph6(g), "operation": op.to_json(), "graph": write_graph6(h), "n": h.n, "m": h.m}
    if isinstance(extra, SubdivisionLabeling):
        payload["internal_vertices"] = [[i, j, l, v] for (i, j, l), v in sorted(extra.internal_vertex_map.items())]
    elif extra is not None:
        payload["renumbering"] = {str(k): v for k, v in sorted(extra.items())}
    _emit(args, payload, f"{write_graph6(h)}\n")
    return EXIT_OK


def _theorems(args: argparse.Namespace) -> tuple[str, ...]:
    if not args.theorem:
        return THEOREMS
    out = []
    for item in args.theorem:
        out += [t.strip() for t in item.split(",") if t.strip()]
    unknown = [t for t in out if t not in THEOREMS]
    if unknown:
        raise UsageError(f"unknown theorem(s) {unknown}; expected from {', '.join(THEOREMS)}")
    return tuple(out)


def cmd_verify(args: argparse.Namespace) -> int:
    graphs = [write_graph6(g) for g in _input_graphs(args)]
    kw: dict[str, Any] = {
        "n_max": args.nmax,
        "theorems": _theorems(args),
        "graphs": tuple(graphs),
        "cap_vertices": args.cap_vertices or 20,
        "records": args.records,
        "workers": args.jobs,
    }
    if args.range:
        lo, hi = _parse_range(args.range)
        kw.update(formula_range=(lo, hi), wheel_range=(max(lo, 3), max(hi, 4)), ratio_range=(max(lo, 3), hi))
    if args.k is not None:
        kw.update(k_min=args.k, k_max=args.k)
    if args.k_range:
        kw["k_min"], kw["k_max"] = _parse_range(args.k_range)
    report = run_suite(SuiteConfig(**kw))
    s = report.summary
    plain = "\n".join(
        f"{th}: checked={row['checked']} violations={row['violations']} tight={row['tight']} skipped={row['skipped']}"
        for th, row in s["per_theorem"].items()
    )
    _emit(args, report.to_json(), plain, report.to_csv())
    print(f"checked={s['checked']} violations={s['violations']} skipped={s['skipped']}", file=sys.stderr)
    return EXIT_FINDING if report.violations else EXIT_OK


def cmd_conjecture(args: argparse.Namespace) -> int:
    report = search_conjecture(args.nmax, workers=args.jobs)
    payload = {"tool": {"name": "domchrom", "version": __version__}, **report.to_json()}
    plain = f"scanned {report.graphs_scanned} graphs, {report.pairs_checked} edges, {len(report.counterexamples)} counterexamples"
    _emit(args, payload, plain)
    return EXIT_FINDING if report.counterexamples else EXIT_OK


def cmd_sharpness(args: argparse.Namespace) -> int:
    found = find_sharpness_witnesses(args.theorem, args.bound, args.nmax, smallest_only=args.first)
    shown = found if args.limit is None else found[: args.limit]
    payload = {
        "tool": {"name": "domchrom", "version": __version__},
        "theorem": args.theorem,
        "bound": args.bound,
        "n_max": args.nmax,
        "count": len(found),
        "witnesses": [r.to_json() for r in shown],
    }
    plain = "\n".join(f"{r.graph} {json.dumps(r.operation.to_json())}" for r in shown) or "no witnesses"
    _emit(args, payload, plain)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_graph_inputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", action="append", help="graph6 literal (repeatable)")
    p.add_argument("--family", action="append", help="family spec kind:n[^1/k], e.g. cycle:5 or star:3^1/5")
    p.add_argument("--graphs-file", help="graph6 file, one record per line")
    p.add_argument("--index", type=int, help="pick one record (0-based) from --graphs-file")


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--format", choices=("json", "csv", "plain"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="domchrom", description="Exact dominated chromatic number toolkit")
    parser.add_argument("--version", action="version", version=f"domchrom {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="compute chi, chi_dom or chi_d^t with a certificate")
    _add_graph_inputs(p)
    p.add_argument("which", choices=("chi", "chidom", "chidt"))
    p.add_argument("--cap-vertices", type=int, default=40)
    _add_output(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("op", help="apply one graph operation and print the result")
    _add_graph_inputs(p)
    p.add_argument("kind", help="delete_edge, delete_vertex, contract_edge, contract_vertex, odot_vertex (odot), subdivide")
    p.add_argument("arg", nargs="?", help="edge 'u,v', vertex id, or k")
    _add_output(p)
    p.set_defaults(func=cmd_op)

    jobs = default_jobs()
    p = sub.add_parser("verify", help="run theorem checks and write a report")
    _add_graph_inputs(p)
    p.add_argument("--theorem", action="append", help="theorem id(s), comma-separated or repeated; default all")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--range", help="n range lo..hi for path_cycle_formula, wheel_gap and odot_ratio")
    p.add_argument("--k", type=int)
    p.add_argument("--k-range")
    p.add_argument("--cap-vertices", type=int)
    p.add_argument("--records", choices=("all", "findings"), default="all")
    p.add_argument("--jobs", type=int, default=jobs)
    _add_output(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", help="search contraction-conjecture counterexamples")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--jobs", type=int, default=jobs)
    _add_output(p)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("sharpness", help="find instances meeting a bound with equality")
    p.add_argument("theorem", choices=sorted(SHARPNESS_BOUNDS))
    p.add_argument("bound", choices=("lower", "upper"))
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--first", action="store_true", help="stop at the smallest n with a witness")
    p.add_argument("--limit", type=int, help="print at most this many witnesses")
    _add_output(p)
    p.set_defaults(func=cmd_sharpness)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomChromError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
