import math
import random

import pytest

from twdecomp import (CutResult, Exceeded, Graph, TerminalSpec,
                      approx_3way_vertex_cut, brute_force_min_multiway,
                      brute_force_min_separator, max_disjoint_paths,
                      min_vertex_separator)
from twdecomp.corpus import complete_graph, cycle_graph, gnp_connected, star_graph


def cut_is_consistent(g, terminals, res):
    sep, s1, s2 = set(res.separator), set(res.side1), set(res.side2)
    assert len(sep) + len(s1) + len(s2) == g.n
    assert not (sep & s1) and not (sep & s2) and not (s1 & s2)
    for u, v in g.edges():
        assert not ((u in s1 and v in s2) or (u in s2 and v in s1))
    assert set(terminals.side_a) - sep <= s1
    assert set(terminals.side_b) - sep <= s2


def test_terminal_spec_rejects_overlap():
    with pytest.raises(ValueError):
        TerminalSpec((0, 1), (1, 2))


def test_terminal_spec_rejects_empty_side():
    with pytest.raises(ValueError):
        TerminalSpec((), (1,))


def test_path_bottleneck():
    # a - x - c: the minimum is a single vertex; unit capacities make the
    # source attachment itself the frontier cut.
    g = Graph(3, [(0, 1), (1, 2)])
    terminals = TerminalSpec((0,), (2,))
    res = min_vertex_separator(g, terminals, 2)
    assert isinstance(res, CutResult)
    assert len(res.separator) == 1 == brute_force_min_separator(g, terminals)
    cut_is_consistent(g, terminals, res)


def test_square_cycle_cut():
    g = cycle_graph(4)
    terminals = TerminalSpec((0,), (2,))
    res = min_vertex_separator(g, terminals, 4)
    assert len(res.separator) == brute_force_min_separator(g, terminals) == 1
    cut_is_consistent(g, terminals, res)


def test_complete_minus_one_edge():
    edges = [(i, j) for i in range(5) for j in range(i + 1, 5) if (i, j) != (0, 1)]
    g = Graph(5, edges)
    terminals = TerminalSpec((0,), (1,))
    res = min_vertex_separator(g, terminals, 4)
    assert len(res.separator) == brute_force_min_separator(g, terminals) == 1
    cut_is_consistent(g, terminals, res)


def test_wide_attachments_need_internal_cut():
    # With both endpoints of every short path attached, the cut must use the
    # two middle vertices: a full Menger-style instance.
    g = cycle_graph(4)
    terminals = TerminalSpec((0, 2), (1, 3))
    res = min_vertex_separator(g, terminals, 4)
    assert isinstance(res, CutResult)
    assert len(res.separator) == brute_force_min_separator(g, terminals) == 2


def test_exceeded_after_bound_plus_one_augmentations():
    g = complete_graph(6)
    terminals = TerminalSpec((0, 1, 2), (3, 4, 5))
    res = min_vertex_separator(g, terminals, 1)
    assert isinstance(res, Exceeded)
    assert res.augmentations == 2


def test_matches_brute_force_on_random_graphs():
    rng = random.Random(4242)
    for _ in range(60):
        n = rng.randint(4, 10)
        g = gnp_connected(n, rng.uniform(0.25, 0.6), rng)
        verts = list(range(n))
        rng.shuffle(verts)
        a = rng.randint(1, max(1, n // 3))
        b = rng.randint(1, max(1, n // 3))
        terminals = TerminalSpec(tuple(verts[:a]), tuple(verts[a:a + b]))
        res = min_vertex_separator(g, terminals, n)
        assert isinstance(res, CutResult)
        assert len(res.separator) == brute_force_min_separator(g, terminals)
        assert res.augmentations <= n + 1
        cut_is_consistent(g, terminals, res)


def test_menger_duality_on_small_graphs():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(4, 8)
        g = gnp_connected(n, rng.uniform(0.25, 0.5), rng)
        verts = list(range(n))
        rng.shuffle(verts)
        terminals = TerminalSpec(tuple(verts[:2]), tuple(verts[2:4]))
        res = min_vertex_separator(g, terminals, n)
        packing = max_disjoint_paths(g, terminals.side_a, terminals.side_b)
        assert len(res.separator) == packing


def test_determinism():
    rng = random.Random(3)
    g = gnp_connected(9, 0.4, rng)
    terminals = TerminalSpec((0, 1), (7, 8))
    first = min_vertex_separator(g, terminals, 9)
    second = min_vertex_separator(g, terminals, 9)
    assert first == second


def test_three_way_star_all_isolating_cuts_are_center():
    g = star_graph(3)
    res = approx_3way_vertex_cut(g, (1,), (2,), (3,), 3)
    assert res.separator == (0,)
    assert res.sides == ((1,), (2,), (3,))


def test_three_way_spider_matches_brute_force():
    # Three legs t1-a-m, t2-b-m, t3-c-m meeting at m: removing the meeting
    # point separates everything, so the optimum is a single vertex.
    g = Graph(7, [(0, 1), (1, 2), (3, 4), (4, 2), (5, 6), (6, 2)])
    groups = ((0,), (3,), (5,))
    opt = brute_force_min_multiway(g, groups)
    assert opt == 1
    res = approx_3way_vertex_cut(g, *groups, bound=3)
    assert len(res.separator) == 1


def test_three_way_respects_four_thirds_factor():
    rng = random.Random(606)
    for _ in range(40):
        n = rng.randint(5, 10)
        g = gnp_connected(n, rng.uniform(0.25, 0.6), rng)
        verts = list(range(n))
        rng.shuffle(verts)
        groups = (tuple(verts[0:1]), tuple(verts[1:2]), tuple(verts[2:3]))
        res = approx_3way_vertex_cut(g, *groups, bound=n)
        opt = brute_force_min_multiway(g, groups)
        got = len(res.separator)
        assert got <= math.ceil(4 * opt / 3)
        sides = res.sides
        combined = set(res.separator) | set().union(*map(set, sides))
        assert len(combined) == n


def test_three_way_exceeded_when_bound_too_small():
    g = complete_graph(7)
    res = approx_3way_vertex_cut(g, (0,), (1,), (2,), 1)
    assert isinstance(res, Exceeded)


def test_three_way_rejects_overlapping_groups():
    with pytest.raises(ValueError):
        approx_3way_vertex_cut(star_graph(3), (1,), (1,), (2,), 3)
