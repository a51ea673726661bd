"""Balanced separator search by exhaustive canonical enumeration.

Each procedure walks the candidate splits of a target vertex set in a fixed
combinatorial order, makes each chosen part a clique, and asks the flow
engine for a minimum cut between the parts.  Returning None is a sound
certificate that no qualifying separator exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .flow import Counters, Exceeded, TerminalSpec, approx_3way_vertex_cut, min_vertex_separator
from .graph import Graph, make_clique, vset

DEFAULT_ALPHA = Fraction(4, 3)


@dataclass(frozen=True)
class TwoWaySep:
    x: tuple[int, ...]
    s1: tuple[int, ...]
    s2: tuple[int, ...]


@dataclass(frozen=True)
class ThreeWaySep:
    x: tuple[int, ...]
    s1: tuple[int, ...]
    s2: tuple[int, ...]
    s3: tuple[int, ...]

    def sides(self):
        return (self.s1, self.s2, self.s3)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise RuntimeError(f"separator invariant violated: {message}")


def try_split(g: Graph, group_a: Iterable[int], group_b: Iterable[int],
              bound: int, counters: Counters | None = None) -> TwoWaySep | None:
    """One candidate split: clique both groups, cut between super-terminals.

    Returns None when the minimum cut exceeds the bound or leaves one side
    empty; both are normal outcomes.
    """
    a = vset(group_a)
    b = vset(group_b)
    g1, _ = make_clique(g, a)
    g2, _ = make_clique(g1, b)
    res = min_vertex_separator(g2, TerminalSpec(a, b), bound, counters)
    if isinstance(res, Exceeded):
        return None
    if not res.side1 or not res.side2:
        return None
    return TwoWaySep(res.separator, res.side1, res.side2)


def two_thirds_vtx_sep(g: Graph, targets: Iterable[int], k: int,
                       counters: Counters | None = None) -> TwoWaySep | None:
    """Two-thirds-balanced separator of the target set, of size at most k.

    Enumerates every choice of ceil(|T|/2) targets against ceil(|T|/3) of
    the rest, in ascending combinadic order, returning the first success.
    None certifies that no such separator exists.
    """
    w = vset(targets)
    size = len(w)
    if size < 2:
        return None
    take_a = _ceil_div(size, 2)
    take_b = _ceil_div(size, 3)
    for first in combinations(w, take_a):
        chosen = set(first)
        rest = tuple(v for v in w if v not in chosen)
        for second in combinations(rest, take_b):
            sep = try_split(g, first, second, k, counters)
            if sep is None:
                continue
            _require(len(sep.x) <= k, "separator above bound")
            for side in (sep.s1, sep.s2):
                _require(3 * len(set(side) & set(w)) <= 2 * size,
                         "side holds more than two thirds of the targets")
            return sep
    return None


def two_way_half_vtx_sep(g: Graph, targets: Iterable[int], k: int,
                         counters: Counters | None = None) -> TwoWaySep | None:
    """Half-balanced two-way separator of size at most floor(1.5 k).

    Only the ceil(|T|/2)-subsets are enumerated; the complement is the other
    part, so far fewer candidates are tried than in the two-thirds search.
    """
    w = vset(targets)
    size = len(w)
    if size < 2:
        return None
    bound = (3 * k) // 2
    take = _ceil_div(size, 2)
    for first in combinations(w, take):
        chosen = set(first)
        second = tuple(v for v in w if v not in chosen)
        if not second:
            continue
        sep = try_split(g, first, second, bound, counters)
        if sep is None:
            continue
        _require(len(sep.x) <= bound, "separator above bound")
        for side in (sep.s1, sep.s2):
            _require(len(set(side) & set(w)) <= take,
                     "side holds more than half of the targets")
        return sep
    return None


def _three_partitions(w: tuple[int, ...], k: int):
    """Ordered 3-partitions with floor(|w|/2) >= |p1| >= |p2| >= |p3|.

    Yields ('fallback', first) blocks once per first part when |p1| > k,
    otherwise ('triple', first, second, third); sizes descend, subsets
    ascend in combinadic order.
    """
    size = len(w)
    for s1 in range(size // 2, _ceil_div(size, 3) - 1, -1):
        if s1 <= 0:
            continue
        if s1 > k:
            for first in combinations(w, s1):
                yield ("fallback", first, None, None)
            continue
        rest_size = size - s1
        hi = min(s1, rest_size)
        lo = _ceil_div(rest_size, 2)
        for s2 in range(hi, lo - 1, -1):
            for first in combinations(w, s1):
                chosen = set(first)
                rest = tuple(v for v in w if v not in chosen)
                for second in combinations(rest, s2):
                    second_set = set(second)
                    third = tuple(v for v in rest if v not in second_set)
                    yield ("triple", first, second, third)


def alpha_sum_sep(g: Graph, targets: Iterable[int], k: int,
                  alpha: Fraction = DEFAULT_ALPHA,
                  counters: Counters | None = None) -> ThreeWaySep | None:
    """Three-way separator whose sides each satisfy |(S_i & T) + X| <= (1+a)k.

    Partitions of the target set are tried largest-part-first.  A first part
    larger than k collapses the other two and reuses the two-way machinery
    with bound k; otherwise all three parts become cliques and the isolating
    cut approximation runs with bound floor(a*k).  Success additionally
    requires at least two non-empty sides.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    alpha = Fraction(alpha)
    if alpha < 1:
        raise ValueError("alpha must be at least 1")
    w = vset(targets)
    wset = set(w)
    cut_bound = math.floor(alpha * k)
    per_side_limit = (1 + alpha) * k

    def qualifies(sep: ThreeWaySep) -> bool:
        nonempty = sum(1 for side in sep.sides() if side)
        if nonempty < 2:
            return False
        x = set(sep.x)
        for side in sep.sides():
            if len((set(side) & wset) | x) > per_side_limit:
                return False
        return True

    for kind, first, second, third in _three_partitions(w, k):
        if kind == "fallback":
            chosen = set(first)
            merged = tuple(v for v in w if v not in chosen)
            two = try_split(g, first, merged, k, counters)
            if two is None:
                continue
            cand = ThreeWaySep(two.x, two.s1, two.s2, ())
        else:
            g3 = g
            for part in (first, second, third):
                if part:
                    g3, _ = make_clique(g3, part)
            cut = approx_3way_vertex_cut(g3, first, second, third, cut_bound, counters)
            if isinstance(cut, Exceeded):
                continue
            cand = ThreeWaySep(cut.separator, *cut.sides)
        if qualifies(cand):
            return cand
    return None
