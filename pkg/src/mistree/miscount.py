"""Exact counting and enumeration of maximal independent sets in trees."""

from __future__ import annotations

import numpy as np

from .treekit import Tree, tree_from_edge_list

BRUTE_FORCE_MAX_ORDER = 20


def count_mis(t: Tree, root: int = 0) -> int:
    """Number of maximal independent sets of ``t``.

    Three states per vertex ``v`` of the tree rooted at ``root``:

    * ``a`` -- ``v`` is in the set;
    * ``b`` -- ``v`` is out and some child is in;
    * ``c`` -- ``v`` is out and no child is in, so the parent must be in.

    The count is ``a + b`` at the root.
    """
    order = [root]
    parent = [-1] * t.n
    parent[root] = root
    for u in order:
        for v in t.adjacency[u]:
            if parent[v] < 0:
                parent[v] = u
                order.append(v)
    a = [1] * t.n
    all_out = [1] * t.n  # prod over children of (a + b)
    none_in = [1] * t.n  # prod over children of b
    for v in reversed(order):
        b_v = all_out[v] - none_in[v]
        c_v = none_in[v]
        if v == root:
            return a[v] + b_v
        p = parent[v]
        a[p] *= b_v + c_v
        all_out[p] *= a[v] + b_v
        none_in[p] *= b_v
    raise AssertionError("unreachable")


def _neighbour_masks(t: Tree) -> list[int]:
    return [sum(1 << u for u in t.adjacency[v]) for v in range(t.n)]


def _maximal_masks(t: Tree) -> np.ndarray:
    """All maximal independent subsets, as bitmasks, by scanning every subset."""
    n = t.n
    if n > BRUTE_FORCE_MAX_ORDER:
        raise ValueError(
            f"brute-force scan is limited to n <= {BRUTE_FORCE_MAX_ORDER}, got n={n}"
        )
    subsets = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(subsets.shape, dtype=bool)
    for u, v in t.edges():
        ok &= ((subsets >> u) & (subsets >> v) & 1) == 0
    for v, mask in enumerate(_neighbour_masks(t)):
        ok &= (((subsets >> v) & 1) == 1) | ((subsets & mask) != 0)
    return subsets[ok]


def enumerate_mis(t: Tree) -> list[frozenset[int]]:
    return [
        frozenset(v for v in range(t.n) if (int(m) >> v) & 1) for m in _maximal_masks(t)
    ]


def count_mis_bruteforce(t: Tree) -> int:
    return int(_maximal_masks(t).size)


def prune_duplicate_leaves(t: Tree) -> Tree:
    """Drop leaves until no vertex is adjacent to two or more leaves.

    Among the leaves sharing a neighbour the lowest-id one is kept. Survivors
    are renumbered densely in their original order. The m.i.s. count is
    unchanged.
    """
    while True:
        if t.n <= 2:
            return t
        drop: set[int] = set()
        for v in range(t.n):
            leaf_nbrs = [u for u in t.adjacency[v] if len(t.adjacency[u]) == 1]
            drop.update(leaf_nbrs[1:])
        if not drop:
            return t
        keep = [v for v in range(t.n) if v not in drop]
        new_id = {v: i for i, v in enumerate(keep)}
        t = tree_from_edge_list(
            len(keep),
            [(new_id[u], new_id[v]) for u, v in t.edges() if u in new_id and v in new_id],
        )
