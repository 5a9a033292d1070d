"""Command-line front end.

One executable, verb subcommands, stable exit codes:

  0  success / certificate valid
  1  certificate violation (one machine-parseable witness line on stdout)
  2  malformed input or flags (message on stderr, nothing written)
  3  solver budget exhausted (best interval printed)

Outputs are byte-identical across runs: no timestamps, no machine info,
no randomness.  ``--workers`` is accepted for compatibility with
partitioned verification; results never depend on it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .bounds import bounds_report
from .construct import (
    InvalidCoverError,
    TriangleError,
    bipartite_orientation_cover,
    coloring_from_elbow_cover,
    coloring_from_orientation_cover,
    cover_via_coloring,
    elbow_cover_complete,
    elbow_double,
    eq_cover_from_orientation_cover,
    k16_table_cover,
    orientation_cover_from_elbow,
    orientation_cover_from_eq_cover,
    orientation_cover_from_eq_cover_trifree,
)
from .covers import (
    CoverFormatError,
    EquivalenceCover,
    EyebrowCover,
    OrientationCover,
    parse_cover,
    parse_coloring,
    write_cover_for,
    write_coloring,
)
from .exact import Budget, solve_invariant
from .graphs import (
    Graph,
    GraphFormatError,
    NotBipartiteError,
    generate_family,
    read_graph_file,
    write_graph_file,
)
from .linegraph import line_graph
from .orientations import HomomorphismError, ImproperColoringError, ShapeError
from .verify import (
    verify_elbow_cover,
    verify_equivalence_cover,
    verify_eyebrow_cover,
    verify_orientation_cover,
)

_USAGE_ERRORS = (
    GraphFormatError,
    CoverFormatError,
    ShapeError,
    HomomorphismError,
    ImproperColoringError,
    NotBipartiteError,
    TriangleError,
    ValueError,
    OSError,
)


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _read_cover(path: str, g: Graph):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_cover(fh.read(), g)


def _cmd_verify(args) -> int:
    g = read_graph_file(args.graph)
    cover = _read_cover(args.cover, g)
    kind = args.kind
    if kind in ("orientation", "elbow"):
        if not isinstance(cover, OrientationCover):
            raise CoverFormatError(
                f"cover file holds a {type(cover).__name__}, not orientations"
            )
        verifier = verify_orientation_cover if kind == "orientation" else verify_elbow_cover
        violation = verifier(g, cover)
        k = cover.k
    elif kind == "eyebrow":
        if not isinstance(cover, EyebrowCover):
            raise CoverFormatError("cover file does not hold an eyebrow cover")
        violation = verify_eyebrow_cover(g, cover)
        k = cover.k
    else:
        if not isinstance(cover, EquivalenceCover):
            raise CoverFormatError("cover file does not hold an equivalence cover")
        violation = verify_equivalence_cover(g, cover)
        k = cover.k
    if violation is None:
        if args.json:
            _emit_json({"status": "valid", "kind": kind, "k": k})
        else:
            print(f"VALID k={k}")
        return 0
    if args.json:
        _emit_json({"status": "violation", "kind": kind, "witness": violation.line()})
    else:
        print(violation.line())
    return 1


def _default_witness_path(graph_path: str, invariant: str) -> str:
    stem = os.path.splitext(graph_path)[0]
    ext = "col" if invariant == "chi" else "cov"
    return f"{stem}.{invariant}.{ext}"


def _cmd_solve(args) -> int:
    g = read_graph_file(args.graph)
    budget = Budget(args.max_nodes, args.max_seconds)
    result = solve_invariant(g, args.invariant, budget)
    witness_path: Optional[str] = None
    if result.status == "exact" and result.witness is not None:
        witness_path = args.output or _default_witness_path(args.graph, args.invariant)
        if args.invariant == "chi":
            _write_text(witness_path, write_coloring(result.witness))
        else:
            _write_text(witness_path, write_cover_for(g, result.witness))
    if args.json:
        _emit_json(
            {
                "invariant": args.invariant,
                "status": result.status,
                "value": result.value,
                "lo": result.lo,
                "hi": result.hi,
                "witness": witness_path,
                "nodes": result.nodes,
            }
        )
    elif result.status == "exact":
        print(f"{args.invariant} = {result.value}")
    else:
        hi = "?" if result.hi is None else str(result.hi)
        print(f"{args.invariant} in [{result.lo}, {hi}]")
    return 0 if result.status == "exact" else 3


def _verify_before_write(g: Graph, cover) -> None:
    if isinstance(cover, OrientationCover):
        verifier = (
            verify_elbow_cover if cover.kind == "elbow" else verify_orientation_cover
        )
        violation = verifier(g, cover)
    elif isinstance(cover, EquivalenceCover):
        violation = verify_equivalence_cover(g, cover)
    else:
        violation = verify_eyebrow_cover(g, cover)
    if violation is not None:  # construction bug; never expected
        raise AssertionError(f"constructed cover failed verification: {violation.line()}")


_CONSTRUCT_NEEDS = {
    "k16-table": (),
    "elbow-complete": ("n",),
    "elbow-double": ("graph", "cover"),
    "bipartite": ("graph",),
    "via-coloring": ("graph",),
    "eq-from-orientation": ("graph", "cover"),
    "orientation-from-eq": ("graph", "cover"),
    "orientation-from-elbow": ("graph", "cover"),
    "coloring-from-elbow": ("graph", "cover"),
    "coloring-from-orientation": ("graph", "cover"),
}


def _cmd_construct(args) -> int:
    op = args.op
    for flag in _CONSTRUCT_NEEDS[op]:
        if getattr(args, flag) is None:
            raise ValueError(f"construct --op {op} requires --{flag}")
    wrote = []

    def emit_cover(ref_graph: Graph, cover) -> None:
        _verify_before_write(ref_graph, cover)
        _write_text(args.output, write_cover_for(ref_graph, cover))
        wrote.append(args.output)

    if op == "k16-table":
        perms, cover = k16_table_cover()
        g16 = generate_family("complete", 16)
        emit_cover(g16, cover)
        if args.perms_output:
            _write_text(args.perms_output, write_cover_for(g16, EyebrowCover(16, perms)))
            wrote.append(args.perms_output)
    elif op == "elbow-complete":
        cover = elbow_cover_complete(args.n)
        emit_cover(generate_family("complete", args.n), cover)
    elif op == "elbow-double":
        g = read_graph_file(args.graph)
        base = _read_cover(args.cover, g)
        cover = elbow_double(g, base)
        big = generate_family("complete", g.n * g.n)
        emit_cover(big, cover)
        if args.graph_output:
            write_graph_file(args.graph_output, big)
            wrote.append(args.graph_output)
    elif op == "bipartite":
        g = read_graph_file(args.graph)
        emit_cover(g, bipartite_orientation_cover(g))
    elif op == "via-coloring":
        g = read_graph_file(args.graph)
        coloring = None
        if args.coloring:
            with open(args.coloring, "r", encoding="utf-8") as fh:
                coloring = parse_coloring(fh.read(), g.n)
        budget = Budget(args.max_nodes, args.max_seconds)
        cover = cover_via_coloring(g, coloring, greedy=args.greedy, budget=budget)
        emit_cover(g, cover)
    elif op == "eq-from-orientation":
        g = read_graph_file(args.graph)
        cover = _read_cover(args.cover, g)
        lm = line_graph(g)
        eq = eq_cover_from_orientation_cover(lm, cover)
        emit_cover(lm.line, eq)
    elif op == "orientation-from-eq":
        g = read_graph_file(args.graph)
        lm = line_graph(g)
        eq = _read_cover(args.cover, lm.line)
        if args.triangle_free:
            cover = orientation_cover_from_eq_cover_trifree(lm, eq)
        else:
            cover = orientation_cover_from_eq_cover(lm, eq)
        emit_cover(g, cover)
    elif op == "orientation-from-elbow":
        g = read_graph_file(args.graph)
        base = _read_cover(args.cover, g)
        emit_cover(g, orientation_cover_from_elbow(g, base))
    elif op == "coloring-from-elbow":
        g = read_graph_file(args.graph)
        base = _read_cover(args.cover, g)
        coloring = coloring_from_elbow_cover(g, base)
        _write_text(args.output, write_coloring(coloring))
        wrote.append(args.output)
    elif op == "coloring-from-orientation":
        g = read_graph_file(args.graph)
        base = _read_cover(args.cover, g)
        coloring = coloring_from_orientation_cover(g, base)
        _write_text(args.output, write_coloring(coloring))
        wrote.append(args.output)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown op {op!r}")

    if args.json:
        _emit_json({"op": op, "wrote": wrote})
    else:
        for path in wrote:
            print(f"WROTE {path}")
    return 0


def _cmd_bounds(args) -> int:
    g = read_graph_file(args.graph)
    budget = Budget(args.max_nodes, args.max_seconds)
    report = bounds_report(g, budget)
    witness_files = {}
    if args.witness_dir:
        os.makedirs(args.witness_dir, exist_ok=True)
        for key in sorted(report.witnesses):
            w = report.witnesses[key]
            if isinstance(w, OrientationCover):
                path = os.path.join(args.witness_dir, f"{key}.cov")
                _write_text(path, write_cover_for(g, w))
            elif isinstance(w, EquivalenceCover):
                path = os.path.join(args.witness_dir, f"{key}.cov")
                _write_text(path, write_cover_for(line_graph(g).line, w))
            else:
                path = os.path.join(args.witness_dir, f"{key}.col")
                _write_text(path, write_coloring(w))
            witness_files[key] = path
    if args.json:
        payload = report.to_dict()
        payload["witness_files"] = witness_files
        _emit_json(payload)
    else:
        for line in report.lines():
            print(line)
        for key in sorted(witness_files):
            print(f"{key}_witness_file: {witness_files[key]}")
    return 0


def _cmd_linegraph(args) -> int:
    g = read_graph_file(args.graph)
    lm = line_graph(g)
    write_graph_file(args.output, lm.line)
    index_lines = [
        f"{i} {u} {v}" for i, (u, v) in enumerate(g.edges)
    ]
    _write_text(args.output + ".index", "\n".join(index_lines) + ("\n" if index_lines else ""))
    if args.json:
        _emit_json(
            {
                "wrote": [args.output, args.output + ".index"],
                "line_n": lm.line.n,
                "line_m": lm.line.m,
            }
        )
    return 0


def _cmd_gen(args) -> int:
    g = generate_family(args.family, args.parameter)
    write_graph_file(args.output, g, comment=None)
    if args.json:
        _emit_json({"wrote": [args.output], "n": g.n, "m": g.m})
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqcover",
        description="verify, solve, and construct graph covering certificates",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("verify", help="check a cover file against a graph file")
    p.add_argument("--kind", required=True, choices=["orientation", "elbow", "eyebrow", "equivalence"])
    p.add_argument("--graph", required=True)
    p.add_argument("--cover", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("solve", help="compute an invariant exactly")
    p.add_argument("--invariant", required=True, choices=["sigma", "elb", "eq", "eye", "chi"])
    p.add_argument("--graph", required=True)
    p.add_argument("--output", help="witness path (default: derived from the graph path)")
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--max-seconds", type=float)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("construct", help="emit a certificate from a constructive proof")
    p.add_argument(
        "--op",
        required=True,
        choices=[
            "k16-table",
            "elbow-complete",
            "elbow-double",
            "bipartite",
            "via-coloring",
            "eq-from-orientation",
            "orientation-from-eq",
            "orientation-from-elbow",
            "coloring-from-elbow",
            "coloring-from-orientation",
        ],
    )
    p.add_argument("--graph")
    p.add_argument("--cover")
    p.add_argument("--coloring")
    p.add_argument("--greedy", action="store_true")
    p.add_argument("--triangle-free", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--output", required=True)
    p.add_argument("--perms-output")
    p.add_argument("--graph-output")
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--max-seconds", type=float)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("bounds", help="interval report for chi, sigma, elb, eq(L)")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--max-seconds", type=float)
    p.add_argument("--witness-dir")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("linegraph", help="write the line graph and its edge index")
    p.add_argument("--graph", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_linegraph)

    p = sub.add_parser("gen", help="write a named family graph")
    p.add_argument("--family", required=True)
    p.add_argument("--parameter", type=int)
    p.add_argument("--output", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_gen)

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InvalidCoverError as exc:
        print(exc.violation.line())
        return 1
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
