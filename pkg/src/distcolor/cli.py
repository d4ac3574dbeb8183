"""Command-line interface producing reproducible JSON/CSV artifacts.

Commands: color, verify, bounds, exact, scan-condition, bhset, circles,
table. Output is byte-identical across runs for identical inputs: no
randomness, no timestamps, sorted JSON keys.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import errors
from .bounds import BoundsReport, aggregate
from .colorings import (
    Coloring,
    Method,
    bipartition_circles,
    circle_graph,
    color_bose_chowla,
    color_sum,
    color_symmetric,
    color_theorem1,
    verify_proper,
)
from .distgraph import GraphSpec, vertex_count
from .errors import BadInput, Error, TooLarge
from .exact import (
    ALPHA_LIMITS,
    CHI_LIMITS,
    AdjacencyMatrix,
    Exhausted,
    SolveLimits,
    exact_chromatic_number,
    exact_independence_number,
)
from .gf import bose_chowla_set
from .numtheory import check_t1_condition, primes_in_class

EXIT_IMPROPER = 3

# one distinct exit code per error class (0 success, 2 usage, 3 improper)
ERROR_EXIT_CODES: dict[type, int] = {
    errors.UnsupportedN: 4,
    errors.NotPrime: 5,
    errors.InvalidPrime: 6,
    errors.TooLarge: 7,
    errors.OddCycle: 8,
    errors.BadInput: 9,
    errors.OutOfRange: 10,
    errors.OutOfValidity: 11,
    errors.ZeroDivisor: 12,
    errors.NotCoprime: 13,
    errors.IncompleteColoring: 14,
    errors.InternalContradiction: 15,
}


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _certificate(coloring: Coloring, proper: bool) -> dict:
    return {
        "n": coloring.spec.n,
        "r": coloring.spec.r,
        "s": coloring.spec.s,
        "method": coloring.method.value,
        "palette_bound": coloring.palette_bound,
        "colors_used": coloring.colors_used,
        "proper": proper,
        "labels": list(coloring.labels),
    }


def _build_coloring(method: str, n: int, r: int | None, s: int | None) -> Coloring:
    if method == "theorem1":
        if (r is not None and r != 3) or (s is not None and s != 2):
            raise BadInput("method theorem1 colors G(n, 3, 2); leave -r/-s unset or use 3/2")
        return color_theorem1(n)
    if method == "sum":
        if r is None:
            raise BadInput("method sum needs -r")
        if s is not None and s != r - 1:
            raise BadInput("method sum colors G(n, r, r-1); leave -s unset or use r-1")
        return color_sum(n, r)
    if r is None or s is None:
        raise BadInput(f"method {method} needs -r and -s")
    if method == "bose-chowla":
        return color_bose_chowla(n, r, s)
    return color_symmetric(n, r, s)


def cmd_color(args: argparse.Namespace) -> int:
    coloring = _build_coloring(args.method, args.n, args.r, args.s)
    violation = verify_proper(coloring.spec, coloring)
    _emit(_json_text(_certificate(coloring, violation is None)), args.out)
    if violation is not None:
        print(
            f"improper: {violation.u} and {violation.v} share color {violation.shared_color}",
            file=sys.stderr,
        )
        return EXIT_IMPROPER
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    with open(args.certificate, encoding="utf-8") as fh:
        data = json.load(fh)
    spec = GraphSpec(data["n"], data["r"], data["s"])
    coloring = Coloring(
        spec, tuple(data["labels"]), Method(data["method"]), data["palette_bound"]
    )
    violation = verify_proper(spec, coloring)
    if violation is not None:
        _emit(
            f"improper: {violation.u} and {violation.v} share color {violation.shared_color}\n",
            args.out,
        )
        return EXIT_IMPROPER
    _emit(
        f"proper coloring of G({spec.n}, {spec.r}, {spec.s}): "
        f"{coloring.colors_used} colors, method {coloring.method.value}\n",
        args.out,
    )
    return 0


def _report_dict(report: BoundsReport) -> dict:
    out = {
        "spec": {"n": report.spec.n, "r": report.spec.r, "s": report.spec.s},
        "lower": [{"value": b.value, "source": b.source} for b in report.lower],
        "upper": [{"value": b.value, "source": b.source} for b in report.upper],
        "best_lower": report.best_lower,
        "best_upper": report.best_upper,
    }
    if report.exact is not None:
        out["exact"] = report.exact
    return out


def cmd_bounds(args: argparse.Namespace) -> int:
    report = aggregate(args.n, args.r, args.s)
    if args.format == "text":
        g = f"G({args.n}, {args.r}, {args.s})"
        if report.exact is not None:
            _emit(f"chi({g}) = {report.exact}\n", args.out)
        else:
            _emit(f"chi({g}) in [{report.best_lower}, {report.best_upper}]\n", args.out)
        return 0
    _emit(_json_text(_report_dict(report)), args.out)
    return 0


def cmd_exact(args: argparse.Namespace) -> int:
    spec = GraphSpec(args.n, args.r, args.s)
    base = CHI_LIMITS if args.which == "chi" else ALPHA_LIMITS
    limits = SolveLimits(
        max_vertices=base.max_vertices,
        max_nodes=args.max_nodes if args.max_nodes else base.max_nodes,
        time_budget=args.time_budget if args.time_budget else base.time_budget,
    )
    count = vertex_count(spec)
    if count > limits.max_vertices:
        raise TooLarge(
            f"G({args.n}, {args.r}, {args.s}) has {count} vertices, "
            f"over the {args.which} cap {limits.max_vertices}"
        )
    graph = AdjacencyMatrix.from_graph_spec(spec)
    solve = exact_chromatic_number if args.which == "chi" else exact_independence_number
    result = solve(graph, limits)
    payload: dict = {"which": args.which, "n": args.n, "r": args.r, "s": args.s}
    if isinstance(result, Exhausted):
        payload["exhausted"] = {"lower": result.lower, "upper": result.upper}
    else:
        payload["value"] = result
    if args.format == "text":
        name = "chi" if args.which == "chi" else "alpha"
        g = f"G({args.n}, {args.r}, {args.s})"
        if isinstance(result, Exhausted):
            upper = "?" if result.upper is None else result.upper
            _emit(f"{name}({g}) unresolved: in [{result.lower}, {upper}]\n", args.out)
        else:
            _emit(f"{name}({g}) = {result}\n", args.out)
        return 0
    _emit(_json_text(payload), args.out)
    return 0


def cmd_scan_condition(args: argparse.Namespace) -> int:
    if args.limit > 10**6:
        raise TooLarge(f"scan limit {args.limit} exceeds 10^6")
    rows = []
    for p in primes_in_class(args.limit, 0, 1):
        if p <= 3:
            continue
        rep = check_t1_condition(p)
        rows.append(
            [
                p,
                p % 8,
                rep.order_of_two,
                "true" if rep.condition_holds else "false",
                "" if rep.witness_r is None else rep.witness_r,
            ]
        )
    _emit(_csv_text(["p", "p_mod_8", "order_of_two", "condition_holds", "witness_r"], rows), args.out)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    if args.n_max > 200:
        raise TooLarge(f"table limit {args.n_max} exceeds 200")
    rows = []
    for n in range(4, args.n_max + 1):
        report = aggregate(n, 3, 2)
        sources = [b.source for b in report.lower if b.value == report.best_lower]
        sources += [
            b.source
            for b in report.upper
            if b.value == report.best_upper and b.source != "reference_eq2"
        ]
        deduped = list(dict.fromkeys(sources))
        rows.append(
            [
                n,
                report.best_lower,
                report.best_upper,
                "" if report.exact is None else report.exact,
                ";".join(deduped),
            ]
        )
    _emit(_csv_text(["n", "best_lower", "best_upper", "exact", "sources"], rows), args.out)
    return 0


def cmd_bhset(args: argparse.Namespace) -> int:
    bh = bose_chowla_set(args.q, args.degree)
    payload = {"q": bh.q, "h": bh.h, "modulus": bh.modulus, "elements": list(bh.elements)}
    _emit(_json_text(payload), args.out)
    return 0


def cmd_circles(args: argparse.Namespace) -> int:
    condition = check_t1_condition(args.p).condition_holds
    if condition:
        bip = bipartition_circles(args.p)
        graph = bip.graph
        bipartition: list[int] | None = list(bip.classes)
    else:
        graph = circle_graph(args.p)
        bipartition = None
    edges = sorted(
        {(min(i, j), max(i, j)) for i, nbrs in enumerate(graph.adjacency) for j in nbrs}
    )
    payload = {
        "p": args.p,
        "condition_holds": condition,
        "circles": [
            {"parameter": c.parameter, "points": list(c.points)} for c in graph.circles
        ],
        "edges": [list(e) for e in edges],
        "bipartition": bipartition,
    }
    _emit(_json_text(payload), args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distcolor",
        description="Colorings, bounds, and exact solvers for the distance graphs G(n, r, s).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_color = sub.add_parser("color", help="build a coloring and emit its certificate JSON")
    p_color.add_argument("--method", required=True, choices=[m.value for m in Method])
    p_color.add_argument("-n", type=int, required=True)
    p_color.add_argument("-r", type=int)
    p_color.add_argument("-s", type=int)
    p_color.add_argument("--out", metavar="PATH")
    p_color.set_defaults(func=cmd_color)

    p_verify = sub.add_parser("verify", help="re-verify a certificate JSON file")
    p_verify.add_argument("certificate", metavar="CERT.json")
    p_verify.add_argument("--out", metavar="PATH")
    p_verify.set_defaults(func=cmd_verify)

    p_bounds = sub.add_parser("bounds", help="aggregate chromatic-number bounds")
    p_bounds.add_argument("-n", type=int, required=True)
    p_bounds.add_argument("-r", type=int, required=True)
    p_bounds.add_argument("-s", type=int, required=True)
    p_bounds.add_argument("--format", choices=["json", "text"], default="json")
    p_bounds.add_argument("--out", metavar="PATH")
    p_bounds.set_defaults(func=cmd_bounds)

    p_exact = sub.add_parser("exact", help="run an exact solver")
    p_exact.add_argument("which", choices=["chi", "alpha"])
    p_exact.add_argument("-n", type=int, required=True)
    p_exact.add_argument("-r", type=int, required=True)
    p_exact.add_argument("-s", type=int, required=True)
    p_exact.add_argument("--max-nodes", type=int)
    p_exact.add_argument("--time-budget", type=float)
    p_exact.add_argument("--format", choices=["json", "text"], default="json")
    p_exact.add_argument("--out", metavar="PATH")
    p_exact.set_defaults(func=cmd_exact)

    p_scan = sub.add_parser("scan-condition", help="CSV of the odd-order condition per prime")
    p_scan.add_argument("--limit", type=int, required=True)
    p_scan.add_argument("--out", metavar="PATH")
    p_scan.set_defaults(func=cmd_scan_condition)

    p_table = sub.add_parser("table", help="CSV bounds table for G(n, 3, 2)")
    p_table.add_argument("--n-max", type=int, required=True)
    p_table.add_argument("--out", metavar="PATH")
    p_table.set_defaults(func=cmd_table)

    p_bhset = sub.add_parser("bhset", help="emit a Bose-Chowla B_h set as JSON")
    p_bhset.add_argument("-q", type=int, required=True, help="prime base")
    p_bhset.add_argument("--degree", type=int, required=True, help="h, the sum length")
    p_bhset.add_argument("--out", metavar="PATH")
    p_bhset.set_defaults(func=cmd_bhset)

    p_circles = sub.add_parser("circles", help="dump the circle graph mod p as JSON")
    p_circles.add_argument("-p", type=int, required=True)
    p_circles.add_argument("--out", metavar="PATH")
    p_circles.set_defaults(func=cmd_circles)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR_EXIT_CODES.get(type(exc), 1)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
