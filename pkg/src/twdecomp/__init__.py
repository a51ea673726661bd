"""Treewidth decomposition toolkit.

Approximate minimum-treewidth triangulation with provable width bounds,
built on flow-based minimum vertex separators, plus independent validators
and brute-force oracles for small graphs.
"""

from .flow import (AUDIT, Counters, CutResult, Exceeded, TerminalSpec,
                   ThreeWayCut, approx_3way_vertex_cut, min_vertex_separator)
from .graph import (Graph, SubgraphView, connected_components, induced_subgraph,
                    make_clique, vset, within_edge_budget)
from .separators import (DEFAULT_ALPHA, ThreeWaySep, TwoWaySep, alpha_sum_sep,
                         try_split, two_thirds_vtx_sep, two_way_half_vtx_sep)
from .triangulate import (ALGORITHMS, AlgoReport, DecomposeResult, RecursionTrace,
                          TreeDecomposition, TreewidthExceeded, TriangSuccess,
                          Triangulation, assemble_tree_decomposition, decompose,
                          min_degree_triang, triang_2way_23, triang_2way_half,
                          triang_3way, triang_generic)
from .validate import (NotChordal, Violation, brute_force_min_multiway,
                       brute_force_min_separator, check_tree_decomposition,
                       clique_number_chordal, exact_treewidth, is_chordal,
                       max_disjoint_paths, permutation_treewidth)

__all__ = [
    "AUDIT", "ALGORITHMS", "AlgoReport", "Counters", "CutResult",
    "DecomposeResult", "DEFAULT_ALPHA", "Exceeded", "Graph", "NotChordal",
    "RecursionTrace", "SubgraphView", "TerminalSpec", "ThreeWayCut",
    "ThreeWaySep", "TreeDecomposition", "TreewidthExceeded", "TriangSuccess",
    "Triangulation", "TwoWaySep", "Violation", "alpha_sum_sep",
    "approx_3way_vertex_cut", "assemble_tree_decomposition",
    "brute_force_min_multiway", "brute_force_min_separator",
    "check_tree_decomposition", "clique_number_chordal", "connected_components",
    "decompose", "exact_treewidth", "induced_subgraph", "is_chordal",
    "make_clique", "max_disjoint_paths", "min_degree_triang",
    "min_vertex_separator", "permutation_treewidth", "triang_2way_23",
    "triang_2way_half", "triang_3way", "triang_generic", "try_split",
    "two_thirds_vtx_sep", "two_way_half_vtx_sep", "vset", "within_edge_budget",
]
