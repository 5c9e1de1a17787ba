"""Command-line front end.

Exit codes: 0 success, 1 computation error (bad input file, enumeration cap,
inapplicable property), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .characterize import cycle_wiener_max_spectral, is_balanced, is_weakly_balanced
from .cycles import CyclicSet
from .energy import format_rational, parse_kernel
from .graphs import (
    Graph,
    GraphError,
    build_cycle,
    build_hypercube,
    build_mobius_ladder,
    build_path,
    build_petersen,
    build_star,
    cartesian_product,
    format_edge_list,
    is_distance_degree_regular,
    parse_edge_list,
    vertex_set,
)
from .maxeven import JSpec, complement_jrep, is_maximally_even, j_representation
from .search import (
    EnumerationCapError,
    Objective,
    ascending_local_search,
    brute_force_extremal,
    descending_local_search,
    is_local_maximizer,
    is_local_minimizer,
)
from .verify import CHECKS, run_checks

__all__ = ["main", "run", "parse_graph_spec", "emit_dot"]

_SIMPLE = {
    "cycle": build_cycle,
    "path": build_path,
    "hypercube": build_hypercube,
    "mobius": build_mobius_ladder,
    "star": build_star,
}


class UsageError(Exception):
    pass


def parse_graph_spec(spec: str) -> Graph:
    """Builtin graph grammar: ``cycle:N``, ``path:N``, ``hypercube:D``, ``mobius:K``,
    ``star:N``, ``petersen`` and ``product:SPEC,SPEC`` (nestable)."""
    graph, rest = _parse_spec(spec)
    if rest:
        raise UsageError(f"trailing input {rest!r} in graph spec {spec!r}")
    return graph


def _parse_spec(s: str) -> tuple[Graph, str]:
    if s.startswith("petersen"):
        return build_petersen(), s[len("petersen"):]
    if s.startswith("product:"):
        left, rest = _parse_spec(s[len("product:"):])
        if not rest.startswith(","):
            raise UsageError("product needs two comma-separated graph specs")
        right, rest = _parse_spec(rest[1:])
        return cartesian_product(left, right), rest
    kind, sep, tail = s.partition(":")
    if not sep or kind not in _SIMPLE:
        raise UsageError(f"unknown graph spec {s!r}")
    digits = len(tail) - len(tail.lstrip("0123456789"))
    if digits == 0:
        raise UsageError(f"{kind} needs an integer parameter")
    try:
        return _SIMPLE[kind](int(tail[:digits])), tail[digits:]
    except GraphError as exc:
        raise UsageError(str(exc)) from None


def _parse_set(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.replace(" ", ",").split(",") if t)
    except ValueError:
        raise UsageError(f"cannot parse vertex set {text!r}") from None


def emit_dot(G: Graph, highlight: Sequence[int] = ()) -> str:
    marked = set(highlight)
    lines = ["graph G {", "  node [shape=circle];"]
    for v in range(G.n):
        if v in marked:
            lines.append(f"  {v} [style=filled, fillcolor=black, fontcolor=white];")
        else:
            lines.append(f"  {v};")
    lines += [f"  {u} -- {v};" for u, v in G.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def _graph_from_args(args) -> tuple[Graph, str]:
    if args.graph_file:
        text = Path(args.graph_file).read_text()
        return parse_edge_list(text), f"file:{args.graph_file}"
    return parse_graph_spec(args.graph), args.graph


def _objective_from_args(args, direction: str) -> Objective:
    kind = args.objective.replace("-", "_")
    if kind == "energy":
        if not args.kernel_file:
            raise UsageError("--objective energy requires --kernel-file")
        kernel = parse_kernel(Path(args.kernel_file).read_text(), name=Path(args.kernel_file).stem)
        return Objective("energy", direction, kernel)
    if args.kernel_file:
        raise UsageError("--kernel-file only applies to --objective energy")
    return Objective(kind, direction)


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", help="builtin graph, e.g. cycle:8 or product:path:2,cycle:5")
    src.add_argument("--graph-file", help="edge-list file: 'n m' then m lines 'u v'")


def _add_objective_args(p: argparse.ArgumentParser, direction: bool = True) -> None:
    p.add_argument("--objective", default="harary", choices=["wiener", "harary", "distance-product", "energy"])
    p.add_argument("--kernel-file", help="kernel table, lines 'i p/q' for i = 1..D")
    if direction:
        p.add_argument("--direction", default="min", choices=["min", "max"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="extremal", description="Extremal-energy vertex sets on graphs.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("gen", help="print a graph")
    _add_graph_args(p)
    p.add_argument("--format", default="text", choices=["text", "json", "dot"])
    p.add_argument("--highlight", default="", help="vertices to fill in DOT output")

    p = sub.add_parser("energy", help="evaluate an objective on a vertex set")
    _add_graph_args(p)
    _add_objective_args(p, direction=False)
    p.add_argument("--set", required=True)

    p = sub.add_parser("extremal", help="brute-force all optimal sets of size m")
    _add_graph_args(p)
    _add_objective_args(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", default="text", choices=["text", "json", "dot"])
    p.add_argument("--cap", type=int, help="maximum number of subsets (default: $EXTREMAL_ENUM_CAP or 1e8)")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("local-search", help="first-improvement local search")
    _add_graph_args(p)
    _add_objective_args(p)
    p.add_argument("--start", required=True)
    p.add_argument("--format", default="text", choices=["text", "json", "dot"])

    p = sub.add_parser("check", help="test a property of a graph or vertex set")
    _add_graph_args(p)
    p.add_argument(
        "--property",
        required=True,
        choices=["maximally-even", "balanced", "weakly-balanced", "wiener-max", "ddr", "local-min", "local-max"],
    )
    p.add_argument("--set", default="")
    _add_objective_args(p, direction=False)

    p = sub.add_parser("jrep", help="print a J-representation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--complement", action="store_true", help="print the complement's J-parameters too")

    p = sub.add_parser("verify", help="run exhaustive small-case theorem checks")
    p.add_argument("--theorem", action="append", choices=sorted(CHECKS), help="repeatable; default all")
    return parser


def _cycle_set(G: Graph, A: tuple[int, ...]) -> CyclicSet:
    if not G.is_labeled_cycle():
        raise ValueError("this property is only defined on a cycle graph")
    return CyclicSet(G.n, A)


def _cmd_gen(args, out) -> int:
    G, _ = _graph_from_args(args)
    if args.format == "dot":
        out.write(emit_dot(G, _parse_set(args.highlight)))
    elif args.format == "json":
        out.write(json.dumps({"n": G.n, "edges": [list(e) for e in G.sorted_edges()], "diameter": G.diameter}) + "\n")
    else:
        out.write(format_edge_list(G))
    return 0


def _cmd_energy(args, out) -> int:
    G, _ = _graph_from_args(args)
    A = vertex_set(_parse_set(args.set), G.n)
    out.write(format_rational(_objective_from_args(args, "min").value(G, A)) + "\n")
    return 0


def _cmd_extremal(args, out) -> int:
    G, label = _graph_from_args(args)
    objective = _objective_from_args(args, args.direction)
    report = brute_force_extremal(G, objective, args.m, cap=args.cap, workers=args.workers)
    if args.format == "json":
        payload = {
            "graph": label,
            "m": report.m,
            "objective": objective.label,
            "direction": objective.direction,
            "optimum": format_rational(report.optimum),
            "witnesses": [list(w) for w in report.witnesses],
        }
        if report.classes is not None:
            payload["classes"] = [list(c) for c in report.classes]
        out.write(json.dumps(payload) + "\n")
    elif args.format == "dot":
        out.write(emit_dot(G, report.witnesses[0] if report.witnesses else ()))
    else:
        out.write(f"optimum {format_rational(report.optimum)}\n")
        for w in report.witnesses:
            out.write(" ".join(map(str, w)) + "\n")
    return 0


def _cmd_local_search(args, out) -> int:
    G, label = _graph_from_args(args)
    objective = _objective_from_args(args, args.direction)
    start = vertex_set(_parse_set(args.start), G.n)
    search = descending_local_search if args.direction == "min" else ascending_local_search
    X = search(G, objective, start)
    value = format_rational(objective.value(G, X))
    if args.format == "json":
        out.write(json.dumps({"graph": label, "start": list(start), "result": list(X), "value": value}) + "\n")
    elif args.format == "dot":
        out.write(emit_dot(G, X))
    else:
        out.write(" ".join(map(str, X)) + "\n" + f"value {value}\n")
    return 0


def _cmd_check(args, out) -> int:
    G, _ = _graph_from_args(args)
    A = vertex_set(_parse_set(args.set), G.n)
    prop = args.property
    if prop == "ddr":
        result = is_distance_degree_regular(G)
    elif prop == "maximally-even":
        result = is_maximally_even(_cycle_set(G, A))
    elif prop == "balanced":
        result = is_balanced(_cycle_set(G, A))
    elif prop == "weakly-balanced":
        result = is_weakly_balanced(_cycle_set(G, A))
    elif prop == "wiener-max":
        result = cycle_wiener_max_spectral(_cycle_set(G, A))
    else:
        objective = _objective_from_args(args, "min")
        check = is_local_minimizer if prop == "local-min" else is_local_maximizer
        result = check(G, A, objective)
    out.write(("true" if result else "false") + "\n")
    return 0


def _cmd_jrep(args, out) -> int:
    spec = JSpec(args.n, args.m, args.r)
    out.write(" ".join(map(str, j_representation(spec).members)) + "\n")
    if args.complement:
        c = complement_jrep(spec)
        out.write(f"complement n={c.n} m={c.m} r={c.r}: " + " ".join(map(str, j_representation(c).members)) + "\n")
    return 0


def _cmd_verify(args, out) -> int:
    checks = run_checks(args.theorem)
    for c in checks:
        out.write(c.line() + "\n")
    return 0 if all(c.passed for c in checks) else 1


_COMMANDS = {
    "gen": _cmd_gen,
    "energy": _cmd_energy,
    "extremal": _cmd_extremal,
    "local-search": _cmd_local_search,
    "check": _cmd_check,
    "jrep": _cmd_jrep,
    "verify": _cmd_verify,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.verb](args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except (EnumerationCapError, GraphError, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
