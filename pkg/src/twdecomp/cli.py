"""Command-line surface: decompose, validate, exact, bench.

Exit codes: 0 success, 1 validation failure, 2 parse or input errors,
3 rejection in fixed-k mode.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .io import ParseError, append_report, emit_decomposition, parse_decomposition, parse_graph
from .triangulate import ALGORITHMS, TriangSuccess, decompose
from .validate import check_tree_decomposition, exact_treewidth


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twdecomp",
                                     description="Tree decompositions with width guarantees")
    sub = parser.add_subparsers(dest="command", required=True)

    dec = sub.add_parser("decompose", help="triangulate a graph and emit a decomposition")
    dec.add_argument("--algo", required=True, choices=ALGORITHMS)
    dec.add_argument("--k", type=int)
    dec.add_argument("--search", action="store_true")
    dec.add_argument("--adaptive", action="store_true")
    dec.add_argument("--alpha", default="4/3")
    dec.add_argument("--in", dest="infile", required=True)
    dec.add_argument("--out", dest="outfile")
    dec.add_argument("--report", dest="report")

    val = sub.add_parser("validate", help="check a decomposition against its graph")
    val.add_argument("--graph", required=True)
    val.add_argument("--td", required=True)

    exa = sub.add_parser("exact", help="exact treewidth of a small graph (n <= 14)")
    exa.add_argument("--in", dest="infile", required=True)

    ben = sub.add_parser("bench", help="run algorithms over a directory of graphs")
    ben.add_argument("--dir", required=True)
    ben.add_argument("--algos", default="mindeg,half45,rs4")
    ben.add_argument("--report", required=True)
    return parser


def _load_graph(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return None
    try:
        parsed = parse_graph(text)
    except ParseError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return None
    for note in parsed.warnings:
        print(f"warning: {path}: {note}", file=sys.stderr)
    return parsed


def _cmd_decompose(args) -> int:
    parsed = _load_graph(args.infile)
    if parsed is None:
        return 2
    modes = sum(1 for flag in (args.k is not None, args.search, args.adaptive) if flag)
    if args.algo != "mindeg" and modes != 1:
        print("error: choose exactly one of --k, --search, --adaptive", file=sys.stderr)
        return 2
    try:
        alpha = Fraction(args.alpha)
    except (ValueError, ZeroDivisionError):
        print(f"error: bad --alpha value {args.alpha!r}", file=sys.stderr)
        return 2
    result = decompose(parsed.graph, args.algo, k=args.k, search=args.search,
                       adaptive=args.adaptive, alpha=alpha,
                       graph_name=Path(args.infile).stem)
    if not isinstance(result.outcome, TriangSuccess):
        print(result.outcome.message)
        return 3
    text = emit_decomposition(result.outcome.decomposition, parsed.graph.n)
    if args.outfile:
        Path(args.outfile).write_text(text)
    else:
        sys.stdout.write(text)
    if args.report:
        append_report(args.report, result.report)
    return 0


def _cmd_validate(args) -> int:
    parsed = _load_graph(args.graph)
    if parsed is None:
        return 2
    try:
        td_parsed = parse_decomposition(Path(args.td).read_text())
    except (OSError, ParseError) as exc:
        print(f"error: {args.td}: {exc}", file=sys.stderr)
        return 2
    violations = check_tree_decomposition(parsed.graph, td_parsed.decomposition)
    mismatch = td_parsed.declared_vertices != parsed.graph.n
    if mismatch:
        print(f"vertex count mismatch: graph has {parsed.graph.n}, "
              f"decomposition declares {td_parsed.declared_vertices}")
    if violations or mismatch:
        for v in violations:
            print(v.message)
        print(f"invalid: {len(violations) + int(mismatch)} violation(s)")
        return 1
    print(f"valid: width {td_parsed.decomposition.width}")
    return 0


def _cmd_exact(args) -> int:
    parsed = _load_graph(args.infile)
    if parsed is None:
        return 2
    try:
        width = exact_treewidth(parsed.graph)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(width)
    return 0


def _cmd_bench(args) -> int:
    root = Path(args.dir)
    files = sorted(root.glob("*.gr"))
    if not files:
        print(f"error: no .gr files under {root}", file=sys.stderr)
        return 2
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    for algo in algos:
        if algo not in ALGORITHMS:
            print(f"error: unknown algorithm {algo!r}", file=sys.stderr)
            return 2
    for path in files:
        parsed = _load_graph(str(path))
        if parsed is None:
            return 2
        for algo in algos:
            if algo == "mindeg":
                result = decompose(parsed.graph, algo, graph_name=path.stem)
            else:
                result = decompose(parsed.graph, algo, search=True, graph_name=path.stem)
            append_report(args.report, result.report)
            width = result.report.width_plus_one
            print(f"{path.stem} {algo}: width+1={width} "
                  f"k={result.k_used} {result.report.wall_ms:.0f}ms")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "decompose":
        return _cmd_decompose(args)
    if args.command == "validate":
        return _cmd_validate(args)
    if args.command == "exact":
        return _cmd_exact(args)
    if args.command == "bench":
        return _cmd_bench(args)
    return 2


if __name__ == "__main__":
    sys.exit(main())
