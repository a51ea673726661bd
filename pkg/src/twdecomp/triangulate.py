"""Recursive triangulation drivers, the min-degree baseline, and tree
decomposition assembly.

Each driver recursively splits the graph along a balanced separator, makes a
clique of the inherited boundary plus the separator, and recurses on the
sides.  A failed separator search certifies that the treewidth exceeds k-1.
"""

from __future__ import annotations

import math
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Optional, Union

from .flow import Counters
from .graph import (Graph, connected_components, induced_subgraph, vset,
                    within_edge_budget)
from .separators import (DEFAULT_ALPHA, ThreeWaySep, TwoWaySep, alpha_sum_sep,
                         try_split, two_thirds_vtx_sep, two_way_half_vtx_sep)
from .validate import NotChordal, clique_number_chordal, is_chordal


@dataclass(frozen=True)
class Triangulation:
    base: Graph
    fill_edges: tuple[tuple[int, int], ...]
    chordal: Graph
    peo: tuple[int, ...]
    clique_number: int


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple[tuple[int, ...], ...]
    tree_edges: tuple[tuple[int, int], ...]
    width: int

    @classmethod
    def from_bags(cls, bags, tree_edges) -> "TreeDecomposition":
        bags = tuple(vset(b) for b in bags)
        width = max((len(b) for b in bags), default=0) - 1
        return cls(bags, tuple(tree_edges), width)


@dataclass(frozen=True)
class TriangSuccess:
    triangulation: Triangulation
    decomposition: TreeDecomposition


@dataclass(frozen=True)
class TreewidthExceeded:
    k: int

    @property
    def message(self) -> str:
        return f"the treewidth exceeds {self.k - 1}"


TriangOutcome = Union[TriangSuccess, TreewidthExceeded]


@dataclass
class RecursionTrace:
    """One recursive call: its bag and the traces of its children."""

    bag: tuple[int, ...]
    children: list["RecursionTrace"] = field(default_factory=list)


@dataclass(frozen=True)
class AlgoReport:
    """One benchmark row: input stats, achieved width, and work counters."""

    graph: str
    n: int
    m: int
    algo: str
    mode: str
    k_used: int
    width_plus_one: int | None
    separator_calls: int
    flow_augmentations: int
    wall_ms: float


@dataclass(frozen=True)
class DecomposeResult:
    k_used: int
    outcome: TriangOutcome
    report: AlgoReport


class _TreewidthExceededSignal(Exception):
    pass


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _bump_recursion_limit(n: int) -> None:
    need = 4 * n + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def _pad_targets(g: Graph, boundary: tuple[int, ...], size: int) -> tuple[int, ...]:
    # Fill up with the smallest vertex ids not already present.
    wanted = min(g.n, size)
    if len(boundary) >= wanted:
        return boundary
    have = set(boundary)
    extra = []
    for v in range(g.n):
        if v not in have:
            extra.append(v)
            if len(boundary) + len(extra) == wanted:
                break
    return vset(boundary + tuple(extra))


def _missing_pairs(g: Graph, members: Iterable[int]) -> set[tuple[int, int]]:
    return {(u, v) for u, v in combinations(vset(members), 2) if v not in g.adj[u]}


def _lift_trace(trace: RecursionTrace, view) -> RecursionTrace:
    return RecursionTrace(view.lift_vertices(trace.bag),
                          [_lift_trace(c, view) for c in trace.children])


def _two_way_component(g: Graph, boundary: tuple[int, ...], k: int, split_fn,
                       base_size: int, pad_size: int, counters: Counters):
    n = g.n
    if n <= base_size:
        return _missing_pairs(g, range(n)), RecursionTrace(tuple(range(n)))
    if not within_edge_budget(g, k):
        raise _TreewidthExceededSignal
    targets = _pad_targets(g, boundary, pad_size)
    sep = split_fn(g, targets, k, counters)
    if sep is None:
        raise _TreewidthExceededSignal
    boundary_set = set(boundary)
    fills: set[tuple[int, int]] = set()
    children = []
    for side in (sep.s1, sep.s2):
        if not side:
            continue
        view = induced_subgraph(g, vset(side + sep.x))
        child_boundary = vset(view.local(v)
                              for v in (boundary_set & set(side)) | set(sep.x))
        child_fills, child_trace = _two_way_component(
            view.graph, child_boundary, k, split_fn, base_size, pad_size, counters)
        fills.update(view.lift_edge(e) for e in child_fills)
        children.append(_lift_trace(child_trace, view))
    bag = vset(boundary + sep.x)
    fills.update(_missing_pairs(g, bag))
    return fills, RecursionTrace(bag, children)


def _three_way_component(g: Graph, boundary: tuple[int, ...], k: int, oracle,
                         base_size: int, pad_size: int,
                         bound_fn: Optional[Callable[[int], int]],
                         counters: Counters):
    n = g.n
    if n <= base_size:
        return _missing_pairs(g, range(n)), RecursionTrace(tuple(range(n)))
    if not within_edge_budget(g, k):
        raise _TreewidthExceededSignal
    targets = _pad_targets(g, boundary, pad_size)
    sep = oracle(g, targets, k, counters)
    if sep is None:
        raise _TreewidthExceededSignal
    _check_three_way_contract(g, sep)
    if bound_fn is not None and len(sep.x) > bound_fn(k):
        raise _TreewidthExceededSignal
    boundary_set = set(boundary)
    fills: set[tuple[int, int]] = set()
    children = []
    for side in sep.sides():
        if not side:
            continue
        view = induced_subgraph(g, vset(side + sep.x))
        child_boundary = vset(view.local(v)
                              for v in (boundary_set & set(side)) | set(sep.x))
        child_fills, child_trace = _three_way_component(
            view.graph, child_boundary, k, oracle, base_size, pad_size,
            bound_fn, counters)
        fills.update(view.lift_edge(e) for e in child_fills)
        children.append(_lift_trace(child_trace, view))
    bag = vset(boundary + sep.x)
    fills.update(_missing_pairs(g, bag))
    return fills, RecursionTrace(bag, children)


def _check_three_way_contract(g: Graph, sep: ThreeWaySep) -> None:
    pieces = [sep.x, *sep.sides()]
    combined: set[int] = set()
    total = 0
    for piece in pieces:
        combined.update(piece)
        total += len(piece)
    if total != g.n or len(combined) != g.n:
        raise RuntimeError("oracle result does not partition the vertices")
    if sum(1 for side in sep.sides() if side) < 2:
        raise RuntimeError("oracle result has fewer than two non-empty sides")
    owner = {}
    for idx, side in enumerate(sep.sides()):
        for v in side:
            owner[v] = idx
    for u, v in g.edges():
        if u in owner and v in owner and owner[u] != owner[v]:
            raise RuntimeError(f"oracle separator misses edge ({u}, {v})")


def assemble_tree_decomposition(trace) -> TreeDecomposition:
    """Flatten recursion traces into a tree decomposition.

    Accepts a single root trace or a list of per-component roots; component
    roots are chained by arbitrary tree edges so the result is one tree.
    """
    roots = trace if isinstance(trace, list) else [trace]
    bags: list[tuple[int, ...]] = []
    edges: list[tuple[int, int]] = []

    def walk(node: RecursionTrace) -> int:
        idx = len(bags)
        bags.append(node.bag)
        for child in node.children:
            cidx = walk(child)
            edges.append((idx, cidx))
        return idx

    root_ids = [walk(r) for r in roots]
    for a, b in zip(root_ids, root_ids[1:]):
        edges.append((a, b))
    if not bags:
        bags.append(())
    return TreeDecomposition.from_bags(bags, edges)


def _per_component(g: Graph, recurse) -> tuple[set[tuple[int, int]], list[RecursionTrace]]:
    comps = connected_components(g)
    if len(comps) <= 1:
        fills, trace = recurse(g, ())
        return fills, [trace]
    fills: set[tuple[int, int]] = set()
    traces = []
    for comp in comps:
        view = induced_subgraph(g, comp)
        cf, ct = recurse(view.graph, ())
        fills.update(view.lift_edge(e) for e in cf)
        traces.append(_lift_trace(ct, view))
    return fills, traces


def _finish(g: Graph, k: int, fills: set, traces: list, clique_cap: int | None) -> TriangSuccess:
    chordal = Graph(g.n, list(g.edges()) + sorted(fills)) if fills else g
    order = is_chordal(chordal)
    if isinstance(order, NotChordal):
        raise RuntimeError("triangulated output is not chordal")
    cn = clique_number_chordal(chordal, order)
    if clique_cap is not None and cn > clique_cap:
        raise RuntimeError(
            f"clique number {cn} breaks the guarantee {clique_cap} for k={k}")
    td = assemble_tree_decomposition(traces)
    if td.width > cn - 1:
        raise RuntimeError("decomposition width exceeds clique number - 1")
    tri = Triangulation(g, tuple(sorted(fills)), chordal, order, cn)
    return TriangSuccess(tri, td)


def triang_2way_23(g: Graph, k: int, counters: Counters | None = None) -> TriangOutcome:
    """Two-way driver with two-thirds-balanced separators; width <= 4k+1."""
    if k < 1:
        raise ValueError("k must be at least 1")
    counters = counters if counters is not None else Counters()
    _bump_recursion_limit(g.n)
    recurse = lambda comp, boundary: _two_way_component(
        comp, boundary, k, two_thirds_vtx_sep, 4 * k, 3 * k + 2, counters)
    try:
        fills, traces = _per_component(g, recurse)
    except _TreewidthExceededSignal:
        return TreewidthExceeded(k)
    return _finish(g, k, fills, traces, 4 * k + 1)


def triang_2way_half(g: Graph, k: int, counters: Counters | None = None) -> TriangOutcome:
    """Two-way driver with half-balanced separators; width <= floor(4.5k)+2."""
    if k < 1:
        raise ValueError("k must be at least 1")
    counters = counters if counters is not None else Counters()
    _bump_recursion_limit(g.n)
    recurse = lambda comp, boundary: _two_way_component(
        comp, boundary, k, two_way_half_vtx_sep, 4 * k, 3 * k + 2, counters)
    try:
        fills, traces = _per_component(g, recurse)
    except _TreewidthExceededSignal:
        return TreewidthExceeded(k)
    return _finish(g, k, fills, traces, (9 * k) // 2 + 2)


def triang_3way(g: Graph, k: int, alpha: Fraction = DEFAULT_ALPHA,
                counters: Counters | None = None) -> TriangOutcome:
    """Three-way driver with alpha-sum separators; width <= ceil((2a+1)k)."""
    alpha = Fraction(alpha)
    oracle = lambda comp, targets, kk, cnt: alpha_sum_sep(comp, targets, kk, alpha, cnt)
    return triang_generic(
        g, k, oracle,
        bound_fn=lambda kk: math.floor(alpha * kk),
        base_fn=lambda kk: math.floor((2 * alpha + 1) * kk),
        pad_fn=lambda kk: math.floor((1 + alpha) * kk) + 1,
        clique_cap=math.ceil((2 * alpha + 1) * k),
        counters=counters)


def triang_generic(g: Graph, k: int, oracle,
                   bound_fn: Optional[Callable[[int], int]] = None,
                   base_fn: Optional[Callable[[int], int]] = None,
                   pad_fn: Optional[Callable[[int], int]] = None,
                   clique_cap: int | None = None,
                   counters: Counters | None = None) -> TriangOutcome:
    """Three-way recursion skeleton with a pluggable separator oracle.

    ``oracle(graph, targets, k, counters)`` must return a ThreeWaySep or
    None.  Separators larger than ``bound_fn(k)`` are treated as not found.
    No width guarantee is claimed beyond what the oracle provides.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    counters = counters if counters is not None else Counters()
    _bump_recursion_limit(g.n)
    base_size = base_fn(k) if base_fn else math.floor((2 * DEFAULT_ALPHA + 1) * k)
    pad_size = pad_fn(k) if pad_fn else math.floor((1 + DEFAULT_ALPHA) * k) + 1
    recurse = lambda comp, boundary: _three_way_component(
        comp, boundary, k, oracle, base_size, pad_size, bound_fn, counters)
    try:
        fills, traces = _per_component(g, recurse)
    except _TreewidthExceededSignal:
        return TreewidthExceeded(k)
    return _finish(g, k, fills, traces, clique_cap)


def min_degree_triang(g: Graph) -> tuple[Triangulation, TreeDecomposition]:
    """Min-degree elimination heuristic; always succeeds, no width guarantee.

    Repeatedly removes a vertex of smallest current degree (ties to the
    smallest id) after making a clique of its neighborhood.
    """
    n = g.n
    adj = [set(g.adj[v]) for v in range(n)]
    alive = set(range(n))
    order: list[int] = []
    bags: list[tuple[int, ...]] = []
    fills: set[tuple[int, int]] = set()
    pos: dict[int, int] = {}
    for step in range(n):
        v = min(alive, key=lambda u: (len(adj[u]), u))
        nbrs = sorted(adj[v])
        bags.append(vset([v] + nbrs))
        pos[v] = step
        order.append(v)
        for a, b in combinations(nbrs, 2):
            if b not in adj[a]:
                adj[a].add(b)
                adj[b].add(a)
                fills.add((a, b))
        for u in nbrs:
            adj[u].discard(v)
        alive.discard(v)
        adj[v] = set()

    edges = []
    roots = []
    for i, bag in enumerate(bags):
        later = [u for u in bag if pos[u] > i]
        if later:
            parent = min(later, key=lambda u: pos[u])
            edges.append((i, pos[parent]))
        else:
            roots.append(i)
    for a, b in zip(roots, roots[1:]):
        edges.append((a, b))
    if not bags:
        bags.append(())

    chordal = Graph(n, list(g.edges()) + sorted(fills)) if fills else g
    cn = max((len(b) for b in bags), default=0)
    tri = Triangulation(g, tuple(sorted(fills)), chordal, tuple(order), cn)
    return tri, TreeDecomposition.from_bags(bags, edges)


def _adaptive_candidates(targets: tuple[int, ...], flavor: str):
    size = len(targets)
    if size < 2:
        return
    take_a = _ceil_div(size, 2)
    if flavor == "rs4":
        take_b = _ceil_div(size, 3)
        for first in combinations(targets, take_a):
            chosen = set(first)
            rest = tuple(v for v in targets if v not in chosen)
            for second in combinations(rest, take_b):
                yield first, second
    else:
        for first in combinations(targets, take_a):
            chosen = set(first)
            second = tuple(v for v in targets if v not in chosen)
            if second:
                yield first, second


def _adaptive_component(g: Graph, boundary: tuple[int, ...], flavor: str,
                        counters: Counters):
    n = g.n
    if n <= 2:
        return _missing_pairs(g, range(n)), RecursionTrace(tuple(range(n)))
    targets = list(boundary)
    pool = [v for v in range(n) if v not in set(boundary)]
    best: TwoWaySep | None = None
    while True:
        for first, second in _adaptive_candidates(vset(targets), flavor):
            sep = try_split(g, first, second, n, counters)
            if sep is not None and (best is None or len(sep.x) < len(best.x)):
                best = sep
        if best is not None:
            break
        if not pool:
            return _missing_pairs(g, range(n)), RecursionTrace(tuple(range(n)))
        targets.append(pool.pop(0))

    boundary_set = set(boundary)
    fills: set[tuple[int, int]] = set()
    children = []
    for side in (best.s1, best.s2):
        view = induced_subgraph(g, vset(side + best.x))
        child_boundary = vset(view.local(v)
                              for v in (boundary_set & set(side)) | set(best.x))
        cf, ct = _adaptive_component(view.graph, child_boundary, flavor, counters)
        fills.update(view.lift_edge(e) for e in cf)
        children.append(_lift_trace(ct, view))
    bag = vset(boundary + best.x)
    fills.update(_missing_pairs(g, bag))
    return fills, RecursionTrace(bag, children)


def _adaptive_triang(g: Graph, flavor: str, counters: Counters) -> TriangSuccess:
    _bump_recursion_limit(g.n)
    recurse = lambda comp, boundary: _adaptive_component(comp, boundary, flavor, counters)
    fills, traces = _per_component(g, recurse)
    return _finish(g, 0, fills, traces, None)


ALGORITHMS = ("rs4", "half45", "bg367", "generic", "mindeg")


def _fixed_k_run(g, algo, k, alpha, counters):
    if algo == "rs4":
        return triang_2way_23(g, k, counters)
    if algo == "half45":
        return triang_2way_half(g, k, counters)
    if algo in ("bg367", "generic"):
        return triang_3way(g, k, alpha, counters)
    raise ValueError(f"unknown algorithm: {algo}")


def decompose(g: Graph, algo: str, *, k: int | None = None, search: bool = False,
              adaptive: bool = False, alpha: Fraction = DEFAULT_ALPHA,
              graph_name: str = "graph") -> DecomposeResult:
    """Run one algorithm in fixed-k, search, or adaptive mode.

    Search scans k = 1, 2, ... and reports the least k whose run succeeds;
    every failed trial is a sound rejection, so the first success stands.
    Adaptive mode (two-way algorithms only) grows the split set one vertex
    at a time until a minimum cut leaves both sides non-empty, and never
    rejects.  The min-degree baseline ignores the mode entirely.
    """
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm: {algo}")
    alpha = Fraction(alpha)
    counters = Counters()
    start = time.perf_counter()

    if algo == "mindeg":
        tri, td = min_degree_triang(g)
        outcome: TriangOutcome = TriangSuccess(tri, td)
        k_used, mode = 0, "none"
    elif adaptive:
        if algo not in ("rs4", "half45"):
            raise ValueError("adaptive mode supports only the two-way algorithms")
        outcome = _adaptive_triang(g, algo, counters)
        k_used, mode = 0, "adaptive"
    elif search:
        k_used, mode = 0, "search"
        outcome = TreewidthExceeded(0)
        trial = 1
        while True:
            outcome = _fixed_k_run(g, algo, trial, alpha, counters)
            if isinstance(outcome, TriangSuccess):
                k_used = trial
                break
            trial += 1
    elif k is not None:
        outcome = _fixed_k_run(g, algo, k, alpha, counters)
        k_used, mode = k, "fixed-k"
    else:
        raise ValueError("one of k=, search=, adaptive= is required")

    wall_ms = (time.perf_counter() - start) * 1000.0
    width_plus_one = None
    if isinstance(outcome, TriangSuccess):
        width_plus_one = outcome.decomposition.width + 1
    report = AlgoReport(graph_name, g.n, g.m, algo, mode, k_used, width_plus_one,
                        counters.separator_calls, counters.augmentations,
                        round(wall_ms, 3))
    return DecomposeResult(k_used, outcome, report)
