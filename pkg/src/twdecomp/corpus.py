"""Synthetic graph families for tests and benchmarks."""

from __future__ import annotations

import random

from .graph import Graph


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def grid_graph(rows: int, cols: int) -> Graph:
    def at(r, c):
        return r * cols + c

    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((at(r, c), at(r, c + 1)))
            if r + 1 < rows:
                edges.append((at(r, c), at(r + 1, c)))
    return Graph(rows * cols, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return Graph(n, edges)


def gnp_connected(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi graph patched up to connectivity with random tree edges."""
    edges = {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    comp = list(range(n))

    def find(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for u, v in edges:
        comp[find(u)] = find(v)
    for v in range(1, n):
        if find(v) != find(0):
            u = rng.randrange(v)
            edges.add((u, v))
            comp[find(u)] = find(v)
    return Graph(n, sorted(edges))


def k_tree(n: int, k: int, rng: random.Random) -> Graph:
    """Random k-tree: each new vertex is attached to an existing k-clique."""
    if n < k + 1:
        raise ValueError("a k-tree needs at least k+1 vertices")
    edges = [(i, j) for i in range(k + 1) for j in range(i + 1, k + 1)]
    cliques = [tuple(c for c in range(k + 1) if c != out) for out in range(k + 1)]
    for v in range(k + 1, n):
        base = cliques[rng.randrange(len(cliques))]
        for u in base:
            edges.append((u, v))
        for out in base:
            cliques.append(tuple(sorted(set(base) - {out})) + (v,))
    return Graph(n, edges)


def partial_k_tree(n: int, k: int, drop_fraction: float, rng: random.Random) -> Graph:
    """Connected subgraph of a random k-tree with a fraction of edges removed."""
    g = k_tree(n, k, rng)
    edges = set(g.edges())
    candidates = list(edges)
    rng.shuffle(candidates)
    to_drop = int(len(edges) * drop_fraction)
    degree = {v: g.degree(v) for v in range(n)}
    dropped = 0
    for u, v in candidates:
        if dropped >= to_drop:
            break
        if degree[u] <= 1 or degree[v] <= 1:
            continue
        edges.discard((u, v))
        if _connected(n, edges):
            degree[u] -= 1
            degree[v] -= 1
            dropped += 1
        else:
            edges.add((u, v))
    return Graph(n, sorted(edges))


def _connected(n: int, edges: set[tuple[int, int]]) -> bool:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        cur = stack.pop()
        for nxt in adj[cur]:
            if not seen[nxt]:
                seen[nxt] = 1
                count += 1
                stack.append(nxt)
    return count == n
