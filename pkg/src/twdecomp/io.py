"""PACE-style graph and decomposition formats, plus benchmark report rows.

Graphs travel as ``.gr`` text (header ``p tw <n> <m>``, one 1-based edge per
line), decompositions as ``.td`` text (header ``s td <bags> <max bag> <n>``,
``b <id> <vertices>`` lines, then tree edges).  Emission is byte-stable.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass

from .graph import Graph
from .triangulate import AlgoReport, TreeDecomposition


class ParseError(Exception):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class ParsedGraph:
    graph: Graph
    labels: tuple[str, ...]
    warnings: tuple[str, ...]


@dataclass(frozen=True)
class ParsedDecomposition:
    decomposition: TreeDecomposition
    declared_vertices: int


def parse_graph(text: str) -> ParsedGraph:
    """Parse ``.gr`` text; duplicates and self-loops are dropped with a warning."""
    n = None
    declared_m = 0
    header_line = 0
    edge_lines = 0
    edges: set[tuple[int, int]] = set()
    warnings: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError(lineno, "duplicate header line")
            if len(parts) != 4 or parts[1] != "tw":
                raise ParseError(lineno, f"malformed header: {line!r}")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(lineno, f"non-integer header fields: {line!r}")
            if n < 0 or declared_m < 0:
                raise ParseError(lineno, "negative counts in header")
            header_line = lineno
            continue
        if n is None:
            raise ParseError(lineno, "edge line before header")
        if len(parts) != 2:
            raise ParseError(lineno, f"malformed edge line: {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer edge line: {line!r}")
        edge_lines += 1
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(lineno, f"vertex id out of range: {line!r}")
        if u == v:
            warnings.append(f"line {lineno}: dropped self-loop at {u}")
            continue
        key = (min(u, v) - 1, max(u, v) - 1)
        if key in edges:
            warnings.append(f"line {lineno}: dropped duplicate edge {u} {v}")
            continue
        edges.add(key)
    if n is None:
        raise ParseError(0, "missing header line")
    if edge_lines != declared_m:
        raise ParseError(header_line,
                         f"header declares {declared_m} edges but found {edge_lines}")
    graph = Graph(n, sorted(edges))
    labels = tuple(str(v + 1) for v in range(n))
    return ParsedGraph(graph, labels, tuple(warnings))


def emit_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"c {comment}")
    lines.append(f"p tw {g.n} {g.m}")
    for u, v in g.edges():
        lines.append(f"{u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def emit_decomposition(td: TreeDecomposition, n: int) -> str:
    """Serialize a decomposition; identical inputs yield identical bytes."""
    max_bag = max((len(b) for b in td.bags), default=0)
    lines = [f"s td {len(td.bags)} {max_bag} {n}"]
    for i, bag in enumerate(td.bags, start=1):
        row = " ".join(str(v + 1) for v in sorted(bag))
        lines.append(f"b {i} {row}".rstrip())
    for a, b in sorted((min(e), max(e)) for e in td.tree_edges):
        lines.append(f"{a + 1} {b + 1}")
    return "\n".join(lines) + "\n"


def parse_decomposition(text: str) -> ParsedDecomposition:
    header = None
    bags: dict[int, tuple[int, ...]] = {}
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "s":
            if header is not None:
                raise ParseError(lineno, "duplicate solution line")
            if len(parts) != 5 or parts[1] != "td":
                raise ParseError(lineno, f"malformed solution line: {line!r}")
            header = tuple(int(x) for x in parts[2:])
            continue
        if header is None:
            raise ParseError(lineno, "content before solution line")
        if parts[0] == "b":
            try:
                idx = int(parts[1])
                verts = [int(x) for x in parts[2:]]
            except (ValueError, IndexError):
                raise ParseError(lineno, f"malformed bag line: {line!r}")
            if not (1 <= idx <= header[0]):
                raise ParseError(lineno, f"bag index out of range: {idx}")
            if idx in bags:
                raise ParseError(lineno, f"duplicate bag {idx}")
            bags[idx] = tuple(sorted(v - 1 for v in verts))
            continue
        if len(parts) != 2:
            raise ParseError(lineno, f"malformed tree edge line: {line!r}")
        a, b = int(parts[0]), int(parts[1])
        if not (1 <= a <= header[0] and 1 <= b <= header[0]):
            raise ParseError(lineno, f"tree edge index out of range: {line!r}")
        edges.append((a - 1, b - 1))
    if header is None:
        raise ParseError(0, "missing solution line")
    n_bags, _, n_vertices = header
    missing = [i for i in range(1, n_bags + 1) if i not in bags]
    if missing:
        raise ParseError(0, f"missing bag lines: {missing}")
    ordered = tuple(bags[i] for i in range(1, n_bags + 1))
    td = TreeDecomposition.from_bags(ordered, edges)
    return ParsedDecomposition(td, n_vertices)


REPORT_COLUMNS = ("graph", "n", "m", "algo", "mode", "k_used", "width_plus_one",
                  "separator_calls", "flow_augmentations", "wall_ms")


def append_report(path: str, report: AlgoReport) -> None:
    """Append one CSV row, writing the header when the file is new."""
    fresh = not os.path.exists(path) or os.path.getsize(path) == 0
    with open(path, "a", newline="") as handle:
        writer = csv.writer(handle)
        if fresh:
            writer.writerow(REPORT_COLUMNS)
        writer.writerow([
            report.graph, report.n, report.m, report.algo, report.mode,
            report.k_used,
            "" if report.width_plus_one is None else report.width_plus_one,
            report.separator_calls, report.flow_augmentations, report.wall_ms,
        ])
