"""Counting maximal independent sets in trees and checking the extremal bounds by enumeration."""

from .formulas import BParams, argmax_m, big_m, candidate_maximizers, construct_b, minimizer_family, psi
from .miscount import count_mis, count_mis_bruteforce, enumerate_mis, prune_duplicate_leaves
from .treegen import count_free_trees, free_trees, trees_with_diameter
from .treekit import (
    Tree,
    canonical_key,
    centers,
    diameter,
    diametrical_path,
    graph6_decode,
    graph6_encode,
    tree_from_edge_list,
)

__version__ = "0.1.0"
