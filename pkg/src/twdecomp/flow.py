"""Minimum vertex separators between attachment sets, by unit-capacity flow.

Every graph vertex is splittable (capacity one); the two super-terminals are
virtual and uncapacitated.  A separator may therefore contain attachment
vertices: cutting one detaches it from its super-terminal.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, connected_components, vset

_UNSEEN = -1
_ROOT = -2
_FROM_SOURCE = -2
_NO_FLOW = -1


@dataclass
class FlowAudit:
    """Process-wide instrumentation of the augmentation contract."""

    calls: int = 0
    augmentations: int = 0
    violations: int = 0

    def reset(self) -> None:
        self.calls = 0
        self.augmentations = 0
        self.violations = 0


AUDIT = FlowAudit()


@dataclass
class Counters:
    """Per-run tallies threaded through the drivers for reporting."""

    separator_calls: int = 0
    augmentations: int = 0


@dataclass(frozen=True)
class TerminalSpec:
    """Attachment sets of the two super-terminals."""

    side_a: tuple[int, ...]
    side_b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "side_a", vset(self.side_a))
        object.__setattr__(self, "side_b", vset(self.side_b))
        if not self.side_a or not self.side_b:
            raise ValueError("terminal attachment sets must be non-empty")
        if set(self.side_a) & set(self.side_b):
            raise ValueError("terminal attachment sets must be disjoint")


@dataclass(frozen=True)
class CutResult:
    separator: tuple[int, ...]
    side1: tuple[int, ...]
    side2: tuple[int, ...]
    augmentations: int


@dataclass(frozen=True)
class Exceeded:
    """The minimum separator is larger than the requested bound."""

    bound: int
    augmentations: int


@dataclass(frozen=True)
class ThreeWayCut:
    separator: tuple[int, ...]
    sides: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    augmentations: int


def _invariant(condition: bool, message: str) -> None:
    if not condition:
        raise RuntimeError(f"flow invariant violated: {message}")


def min_vertex_separator(g: Graph, terminals: TerminalSpec, bound: int,
                         counters: Counters | None = None) -> CutResult | Exceeded:
    """Minimum vertex cut between the two super-terminals, or Exceeded.

    Returns a minimum-cardinality separator of size <= bound if one exists,
    with side1 the residual-reachable vertices and side2 the remainder.
    Exceeded is reported after bound+1 successful unit augmentations, which
    certifies that every separator is larger than the bound.
    """
    if bound < 0:
        raise ValueError("bound must be non-negative")
    n = g.n
    for v in terminals.side_a + terminals.side_b:
        if not (0 <= v < n):
            raise ValueError(f"terminal vertex out of range: {v}")
    side_a = terminals.side_a
    sink_set = frozenset(terminals.side_b)
    adj = g.adj_sorted

    sat = bytearray(n)
    in_flow = [_NO_FLOW] * n
    flow = 0
    augs = 0
    AUDIT.calls += 1
    if counters is not None:
        counters.separator_calls += 1

    prev = [_UNSEEN] * (2 * n)
    while True:
        # Breadth-first search over residual states; 2v is the entry side of
        # vertex v, 2v+1 its exit side.
        for i in range(2 * n):
            prev[i] = _UNSEEN
        queue = deque()
        for a in side_a:
            s = 2 * a
            if prev[s] == _UNSEEN:
                prev[s] = _ROOT
                queue.append(s)
        goal = -1
        while queue:
            s = queue.popleft()
            v = s >> 1
            if s & 1:
                if v in sink_set:
                    goal = s
                    break
                for w in adj[v]:
                    t = 2 * w
                    if prev[t] == _UNSEEN:
                        prev[t] = s
                        queue.append(t)
                if sat[v]:
                    t = 2 * v
                    if prev[t] == _UNSEEN:
                        prev[t] = s
                        queue.append(t)
            else:
                if not sat[v]:
                    t = 2 * v + 1
                    if prev[t] == _UNSEEN:
                        prev[t] = s
                        queue.append(t)
                u = in_flow[v]
                if u >= 0:
                    t = 2 * u + 1
                    if prev[t] == _UNSEEN:
                        prev[t] = s
                        queue.append(t)
        if goal < 0:
            break

        path = []
        s = goal
        while s != _ROOT:
            path.append(s)
            s = prev[s]
        path.reverse()
        in_flow[path[0] >> 1] = _FROM_SOURCE
        for i in range(len(path) - 1):
            s, t = path[i], path[i + 1]
            v, w = s >> 1, t >> 1
            if v == w:
                sat[v] = 0 if s & 1 else 1
            elif (s & 1) and not (t & 1):
                in_flow[w] = v
            elif not (s & 1) and (t & 1) and in_flow[v] == w:
                in_flow[v] = _NO_FLOW
        flow += 1
        augs += 1
        if flow > bound:
            break

    AUDIT.augmentations += augs
    if counters is not None:
        counters.augmentations += augs
    if augs > bound + 1:
        AUDIT.violations += 1
        raise RuntimeError("augmentation count exceeded bound + 1")

    if flow > bound:
        return Exceeded(bound, augs)

    separator = []
    side1 = []
    side2 = []
    for v in range(n):
        seen_in = prev[2 * v] != _UNSEEN
        seen_out = prev[2 * v + 1] != _UNSEEN
        if seen_in and not seen_out:
            separator.append(v)
        elif seen_in or seen_out:
            side1.append(v)
        else:
            side2.append(v)
    result = CutResult(tuple(separator), tuple(side1), tuple(side2), augs)
    _verify_cut(g, terminals, result, flow)
    return result


def _verify_cut(g: Graph, terminals: TerminalSpec, cut: CutResult, flow: int) -> None:
    _invariant(len(cut.separator) == flow, "cut size differs from flow value")
    n = g.n
    side_of = bytearray(n)
    for v in cut.side2:
        side_of[v] = 2
    for v in cut.separator:
        side_of[v] = 3
    _invariant(
        len(cut.separator) + len(cut.side1) + len(cut.side2) == n,
        "separator and sides do not partition the vertices",
    )
    for u, v in g.edges():
        a, b = side_of[u], side_of[v]
        _invariant(not ((a == 0 and b == 2) or (a == 2 and b == 0)),
                   f"edge ({u}, {v}) crosses the cut")
    sep = set(cut.separator)
    s1 = set(cut.side1)
    s2 = set(cut.side2)
    _invariant(all(v in s1 for v in terminals.side_a if v not in sep),
               "uncut source attachment outside side1")
    _invariant(all(v in s2 for v in terminals.side_b if v not in sep),
               "uncut sink attachment outside side2")


def approx_3way_vertex_cut(g: Graph, t1, t2, t3, bound: int,
                           counters: Counters | None = None) -> ThreeWayCut | Exceeded:
    """Three-way separator by isolating cuts: union of the two cheapest.

    For each group the minimum cut isolating it from the union of the other
    two is computed; the union of the two cheapest such cuts separates all
    three groups pairwise.  For single-vertex groups the result is within
    ceil(4/3 * opt) of the optimum.
    """
    groups = (vset(t1), vset(t2), vset(t3))
    all_terminals: set[int] = set()
    for grp in groups:
        if all_terminals & set(grp):
            raise ValueError("terminal groups must be pairwise disjoint")
        all_terminals |= set(grp)

    total_augs = 0
    isolating: list[tuple[int, int, tuple[int, ...]]] = []
    exceeded = 0
    for i, grp in enumerate(groups):
        others = vset(v for j, other in enumerate(groups) if j != i for v in other)
        if not grp or not others:
            isolating.append((0, i, ()))
            continue
        res = min_vertex_separator(g, TerminalSpec(others, grp), bound, counters)
        total_augs += res.augmentations
        if isinstance(res, Exceeded):
            exceeded += 1
            continue
        isolating.append((len(res.separator), i, res.separator))
    if exceeded >= 2:
        return Exceeded(bound, total_augs)

    isolating.sort(key=lambda item: (item[0], item[1]))
    union: set[int] = set()
    for size, _, sep in isolating[:2]:
        union |= set(sep)
    if len(union) > bound:
        return Exceeded(bound, total_augs)

    separator = vset(union)
    sides = _split_three_ways(g, separator, groups)
    return ThreeWayCut(separator, sides, total_augs)


def _split_three_ways(g, separator, groups):
    sep = set(separator)
    survivors = [set(grp) - sep for grp in groups]
    sides: list[list[int]] = [[], [], []]
    for comp in connected_components(g, separator):
        comp_set = set(comp)
        owners = [i for i in range(3) if comp_set & survivors[i]]
        _invariant(len(owners) <= 1, "terminal groups share a component")
        target = owners[0] if owners else 1
        sides[target].extend(comp)
    return tuple(vset(side) for side in sides)
