import random
from itertools import combinations

import pytest

from twdecomp import (Graph, NotChordal, TerminalSpec, TreeDecomposition,
                      brute_force_min_separator, check_tree_decomposition,
                      clique_number_chordal, exact_treewidth, is_chordal,
                      make_clique, min_degree_triang, permutation_treewidth,
                      triang_2way_23, TriangSuccess)
from twdecomp.corpus import (complete_graph, cycle_graph, gnp_connected,
                             grid_graph, path_graph, random_tree, star_graph)


def cycle_is_chordless(g, cycle):
    k = len(cycle)
    assert k >= 4
    for i in range(k):
        assert g.has_edge(cycle[i], cycle[(i + 1) % k])
    for i, j in combinations(range(k), 2):
        if (j - i) % k not in (1, k - 1):
            assert not g.has_edge(cycle[i], cycle[j])


def test_square_is_not_chordal():
    g = cycle_graph(4)
    res = is_chordal(g)
    assert isinstance(res, NotChordal)
    assert len(res.cycle) == 4
    cycle_is_chordless(g, res.cycle)


def test_square_plus_chord_is_chordal():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert not isinstance(is_chordal(g), NotChordal)


def test_larger_chordless_cycle_witness():
    g = cycle_graph(7)
    res = is_chordal(g)
    assert isinstance(res, NotChordal)
    cycle_is_chordless(g, res.cycle)


def test_saturated_graphs_are_chordal():
    rng = random.Random(21)
    for _ in range(10):
        g = gnp_connected(8, 0.3, rng)
        full, _ = make_clique(g, range(8))
        assert not isinstance(is_chordal(full), NotChordal)


def test_clique_number_on_families():
    k5 = complete_graph(5)
    order = is_chordal(k5)
    assert clique_number_chordal(k5, order) == 5
    tree = random_tree(9, random.Random(3))
    order = is_chordal(tree)
    assert clique_number_chordal(tree, order) == 2


def brute_force_max_clique(g):
    best = 1 if g.n else 0
    for size in range(2, g.n + 1):
        for sub in combinations(range(g.n), size):
            if all(g.has_edge(u, v) for u, v in combinations(sub, 2)):
                best = max(best, size)
    return best


def test_clique_number_matches_brute_force_on_chordal_graphs():
    rng = random.Random(14)
    for _ in range(10):
        g = gnp_connected(rng.randint(4, 9), rng.uniform(0.3, 0.6), rng)
        tri, _ = min_degree_triang(g)
        h = tri.chordal
        order = is_chordal(h)
        assert clique_number_chordal(h, order) == brute_force_max_clique(h)


def test_clique_number_rejects_bad_orderings():
    g = path_graph(4)
    with pytest.raises(ValueError):
        clique_number_chordal(g, (0, 1, 2))
    # a valid permutation that is not a perfect elimination ordering
    c4 = cycle_graph(4)
    with pytest.raises(ValueError):
        clique_number_chordal(c4, (0, 1, 2, 3))


def test_check_single_bag_triangle():
    g = Graph(3, [(0, 1), (1, 2), (0, 2)])
    td = TreeDecomposition.from_bags([(0, 1, 2)], [])
    assert check_tree_decomposition(g, td) == []
    assert td.width == 2


def test_check_reports_uncovered_edge():
    g = Graph(3, [(0, 1), (1, 2), (0, 2)])
    td = TreeDecomposition.from_bags([(0, 1), (1, 2)], [(0, 1)])
    violations = check_tree_decomposition(g, td)
    assert any(v.kind == "uncovered-edge" and v.subject == (0, 2) for v in violations)


def test_check_reports_uncovered_vertex():
    g = path_graph(3)
    td = TreeDecomposition.from_bags([(0, 1), (1,)], [(0, 1)])
    violations = check_tree_decomposition(g, td)
    assert any(v.kind == "uncovered-vertex" and v.subject == 2 for v in violations)
    assert any(v.kind == "uncovered-edge" and v.subject == (1, 2) for v in violations)


def test_check_reports_broken_subtree():
    g = path_graph(4)
    td = TreeDecomposition.from_bags([(0, 1), (1, 2), (2, 3), (1, 3)],
                                     [(0, 1), (1, 2), (2, 3)])
    # vertex 1 appears in bags 0, 1, 3 but bag 2 between them lacks it
    violations = check_tree_decomposition(g, td)
    assert any(v.kind == "broken-subtree" and v.subject == 1 for v in violations)


def test_check_reports_non_tree():
    g = path_graph(3)
    td = TreeDecomposition.from_bags([(0, 1), (1, 2), (1,)], [(0, 1)])
    violations = check_tree_decomposition(g, td)
    assert any(v.kind == "not-a-tree" for v in violations)


def test_check_accepts_driver_output(small_corpus_tw):
    for g, twv in small_corpus_tw[:15]:
        out = triang_2way_23(g, twv + 1)
        assert isinstance(out, TriangSuccess)
        assert check_tree_decomposition(g, out.decomposition) == []


def test_exact_treewidth_families():
    assert exact_treewidth(complete_graph(4)) == 3
    assert exact_treewidth(path_graph(5)) == 1
    assert exact_treewidth(cycle_graph(5)) == 2
    assert exact_treewidth(star_graph(6)) == 1
    assert exact_treewidth(Graph(0)) == -1
    assert exact_treewidth(Graph(1)) == 0


def test_exact_treewidth_grid_with_permutation_anchor():
    g = grid_graph(3, 3)
    assert exact_treewidth(g) == 3
    assert permutation_treewidth(g) == 3


def test_exact_treewidth_matches_permutation_oracle():
    rng = random.Random(50)
    for _ in range(12):
        g = gnp_connected(rng.randint(3, 7), rng.uniform(0.3, 0.7), rng)
        assert exact_treewidth(g) == permutation_treewidth(g)


def test_exact_treewidth_universal_vertex():
    rng = random.Random(51)
    for _ in range(8):
        n = rng.randint(3, 8)
        g = gnp_connected(n, rng.uniform(0.3, 0.6), rng)
        augmented = Graph(n + 1, list(g.edges()) + [(v, n) for v in range(n)])
        assert exact_treewidth(augmented) == exact_treewidth(g) + 1


def test_exact_treewidth_guard():
    with pytest.raises(ValueError):
        exact_treewidth(path_graph(15))


def test_exact_treewidth_of_chordal_equals_clique_number():
    rng = random.Random(52)
    for _ in range(8):
        g = gnp_connected(rng.randint(4, 10), rng.uniform(0.25, 0.5), rng)
        tri, _ = min_degree_triang(g)
        h = tri.chordal
        order = is_chordal(h)
        assert exact_treewidth(h) == clique_number_chordal(h, order) - 1


def test_brute_force_separator_examples():
    g = Graph(3, [(0, 1), (1, 2)])
    assert brute_force_min_separator(g, TerminalSpec((0,), (2,))) == 1
    # adjacent single-vertex attachments: cutting one of them suffices
    k4 = complete_graph(4)
    assert brute_force_min_separator(k4, TerminalSpec((0,), (1,))) == 1


def test_brute_force_separator_guard():
    with pytest.raises(ValueError):
        brute_force_min_separator(path_graph(11), TerminalSpec((0,), (10,)))
