"""Independent correctness machinery: chordality, decomposition checking,
and small brute-force oracles that anchor the test suite."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import Graph, vset


@dataclass(frozen=True)
class NotChordal:
    """Witness of non-chordality: a chordless cycle of length >= 4."""

    cycle: tuple[int, ...]


@dataclass(frozen=True)
class Violation:
    kind: str
    subject: object
    message: str


def _mcs_order(g: Graph) -> list[int]:
    # Maximum cardinality search; ties broken by smallest id.
    n = g.n
    weight = [0] * n
    picked = [False] * n
    order = []
    for _ in range(n):
        best = -1
        best_w = -1
        for v in range(n):
            if not picked[v] and weight[v] > best_w:
                best = v
                best_w = weight[v]
        picked[best] = True
        order.append(best)
        for w in g.adj_sorted[best]:
            if not picked[w]:
                weight[w] += 1
    order.reverse()
    return order


def _peo_failure(g: Graph, order: list[int]):
    # Tarjan-Yannakakis test: for each vertex, its later neighbors minus the
    # earliest must all be adjacent to that earliest neighbor.
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    for v in order:
        later = [w for w in g.adj_sorted[v] if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=lambda w: pos[w])
        for w in later:
            if w != u and w not in g.adj[u]:
                return (v, u, w)
    return None


def _chordless_cycle(g: Graph) -> tuple[int, ...]:
    # Any chordless cycle c0..cm yields a hit for v=c0 with u, w its cycle
    # neighbors: the rest of the cycle avoids N[v] entirely.
    for v in range(g.n):
        nbrs = g.adj_sorted[v]
        for u, w in combinations(nbrs, 2):
            if w in g.adj[u]:
                continue
            blocked = (g.adj[v] - {u, w}) | {v}
            parent = {u: None}
            queue = [u]
            found = False
            while queue and not found:
                cur = queue.pop(0)
                for nxt in g.adj_sorted[cur]:
                    if nxt in blocked or nxt in parent:
                        continue
                    parent[nxt] = cur
                    if nxt == w:
                        found = True
                        break
                    queue.append(nxt)
            if not found:
                continue
            path = [w]
            while path[-1] != u:
                path.append(parent[path[-1]])
            path.reverse()
            return tuple([v] + path)
    raise RuntimeError("no chordless cycle found in a non-chordal graph")


def is_chordal(g: Graph) -> tuple[int, ...] | NotChordal:
    """A perfect elimination ordering, or a chordless-cycle witness."""
    order = _mcs_order(g)
    if _peo_failure(g, order) is None:
        return tuple(order)
    return NotChordal(_chordless_cycle(g))


def clique_number_chordal(g: Graph, peo: Iterable[int]) -> int:
    """Clique number of a chordal graph from its elimination ordering."""
    order = list(peo)
    if sorted(order) != list(range(g.n)):
        raise ValueError("ordering is not a permutation of the vertices")
    if _peo_failure(g, order) is not None:
        raise ValueError("ordering is not a perfect elimination ordering")
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    best = 0
    for v in order:
        later = sum(1 for w in g.adj[v] if pos[w] > pos[v])
        best = max(best, 1 + later)
    return best


def check_tree_decomposition(g: Graph, td) -> list[Violation]:
    """All violations of the three decomposition conditions plus tree-ness."""
    bags = [set(b) for b in td.bags]
    nbags = len(bags)
    out: list[Violation] = []

    for i, bag in enumerate(bags):
        for v in bag:
            if not (0 <= v < g.n):
                out.append(Violation("bag-vertex-range", v,
                                     f"bag {i} holds unknown vertex {v}"))

    edges = []
    for a, b in td.tree_edges:
        if not (0 <= a < nbags and 0 <= b < nbags) or a == b:
            out.append(Violation("not-a-tree", (a, b),
                                 f"bad tree edge ({a}, {b})"))
        else:
            edges.append((a, b))
    tree_adj = [[] for _ in range(nbags)]
    for a, b in edges:
        tree_adj[a].append(b)
        tree_adj[b].append(a)
    if nbags:
        seen = [False] * nbags
        stack = [0]
        seen[0] = True
        while stack:
            cur = stack.pop()
            for nxt in tree_adj[cur]:
                if not seen[nxt]:
                    seen[nxt] = True
                    stack.append(nxt)
        if not all(seen) or len(edges) != nbags - 1:
            out.append(Violation("not-a-tree", None,
                                 f"{nbags} bags with {len(edges)} edges do not form a tree"))

    covered = set().union(*bags) if bags else set()
    for v in range(g.n):
        if v not in covered:
            out.append(Violation("uncovered-vertex", v,
                                 f"vertex {v} appears in no bag"))

    for u, v in g.edges():
        if not any(u in bag and v in bag for bag in bags):
            out.append(Violation("uncovered-edge", (u, v),
                                 f"edge ({u}, {v}) is inside no bag"))

    for v in range(g.n):
        holders = [i for i, bag in enumerate(bags) if v in bag]
        if len(holders) <= 1:
            continue
        holder_set = set(holders)
        seen_h = {holders[0]}
        stack = [holders[0]]
        while stack:
            cur = stack.pop()
            for nxt in tree_adj[cur]:
                if nxt in holder_set and nxt not in seen_h:
                    seen_h.add(nxt)
                    stack.append(nxt)
        if len(seen_h) != len(holders):
            out.append(Violation("broken-subtree", v,
                                 f"bags containing vertex {v} are not connected"))
    return out


def exact_treewidth(g: Graph) -> int:
    """Exact treewidth by dynamic programming over elimination prefixes.

    Guarded to n <= 14; the state space is every subset of vertices.
    """
    n = g.n
    if n > 14:
        raise ValueError("exact treewidth oracle is limited to 14 vertices")
    if n == 0:
        return -1
    nbr = [0] * n
    for v in range(n):
        mask = 0
        for w in g.adj_sorted[v]:
            mask |= 1 << w
        nbr[v] = mask

    def bag_size(t: int, v: int) -> int:
        # Vertices outside t reachable from v through eliminated vertices t.
        comp = 1 << v
        reach = nbr[v]
        frontier = reach & t
        while frontier:
            comp |= frontier
            m = frontier
            while m:
                low = m & -m
                reach |= nbr[low.bit_length() - 1]
                m ^= low
            frontier = reach & t & ~comp
        return (reach & ~t & ~(1 << v)).bit_count()

    full = (1 << n) - 1
    width = [0] * (full + 1)
    width[0] = -1
    for s in range(1, full + 1):
        best = n
        m = s
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            rest = s ^ low
            cost = width[rest]
            q = bag_size(rest, v)
            if q > cost:
                cost = q
            if cost < best:
                best = cost
        width[s] = best
    return width[full]


def permutation_treewidth(g: Graph) -> int:
    """Treewidth by backtracking over explicit elimination orders (n <= 9).

    Simulates fill-in directly on adjacency sets, independent of the subset
    dynamic program, so it serves as its ground anchor.
    """
    n = g.n
    if n > 9:
        raise ValueError("permutation oracle is limited to 9 vertices")
    if n == 0:
        return -1

    def feasible(adj: dict[int, set[int]], limit: int) -> bool:
        if not adj:
            return True
        for v in sorted(adj):
            if len(adj[v]) > limit:
                continue
            nxt = {u: set(s) for u, s in adj.items() if u != v}
            for a in adj[v]:
                for b in adj[v]:
                    if a != b:
                        nxt[a].add(b)
            for u in adj[v]:
                nxt[u].discard(v)
            if feasible(nxt, limit):
                return True
        return False

    base = {v: set(g.adj[v]) for v in range(n)}
    for limit in range(n):
        if feasible(base, limit):
            return limit
    return n - 1


def _groups_disconnected(g: Graph, cut: set[int], groups) -> bool:
    live = [set(grp) - cut for grp in groups]
    seen = set(cut)
    for start in range(g.n):
        if start in seen:
            continue
        seen.add(start)
        comp = {start}
        stack = [start]
        while stack:
            cur = stack.pop()
            for nxt in g.adj_sorted[cur]:
                if nxt not in seen:
                    seen.add(nxt)
                    comp.add(nxt)
                    stack.append(nxt)
        if sum(1 for grp in live if comp & grp) > 1:
            return False
    return True


def brute_force_min_separator(g: Graph, terminals) -> int | float:
    """Minimum separator size between the two attachment sets, by subsets.

    Exhaustive over every vertex subset, smallest first; guarded to n <= 10.
    """
    if g.n > 10:
        raise ValueError("brute-force separator oracle is limited to 10 vertices")
    groups = (set(terminals.side_a), set(terminals.side_b))
    for size in range(g.n + 1):
        for cut in combinations(range(g.n), size):
            if _groups_disconnected(g, set(cut), groups):
                return size
    return float("inf")


def brute_force_min_multiway(g: Graph, groups) -> int | float:
    """Minimum three-way separator size by subset enumeration (n <= 10)."""
    if g.n > 10:
        raise ValueError("brute-force multiway oracle is limited to 10 vertices")
    gsets = [set(grp) for grp in groups]
    for size in range(g.n + 1):
        for cut in combinations(range(g.n), size):
            if _groups_disconnected(g, set(cut), gsets):
                return size
    return float("inf")


def max_disjoint_paths(g: Graph, side_a, side_b, limit: int | None = None) -> int:
    """Largest set of fully vertex-disjoint paths between the two sets.

    Backtracking path packing; intended for graphs of at most ~10 vertices.
    """
    a = vset(side_a)
    b = set(side_b)
    cap = limit if limit is not None else g.n

    def extend(used: set[int], start_index: int, count: int) -> int:
        best = count
        if count >= cap:
            return count
        for i in range(start_index, len(a)):
            src = a[i]
            if src in used:
                continue
            stack = [(src, [src])]
            seen_paths = []
            while stack:
                cur, path = stack.pop()
                if cur in b:
                    seen_paths.append(path)
                    continue
                for nxt in g.adj_sorted[cur]:
                    if nxt in used or nxt in path:
                        continue
                    stack.append((nxt, path + [nxt]))
            for path in seen_paths:
                got = extend(used | set(path), i + 1, count + 1)
                if got > best:
                    best = got
                    if best >= cap:
                        return best
        return best

    return extend(set(), 0, 0)
