import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from mistree.formulas import BParams, construct_b
from mistree.treegen import free_trees
from mistree.treekit import (
    canonical_key,
    centers,
    diameter,
    diametrical_path,
    graph6_decode,
    graph6_encode,
    path_tree,
    star_tree,
    tree_from_edge_list,
)

from oracles import all_pairs_diameter, brute_isomorphic, trees


def test_edge_list_builds_small_trees():
    p2 = tree_from_edge_list(2, [(0, 1)])
    assert p2.adjacency == ((1,), (0,))
    p4 = tree_from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    assert p4.edges() == [(0, 1), (1, 2), (2, 3)]
    assert tree_from_edge_list(1, []).n == 1


@pytest.mark.parametrize(
    "n, edges, message",
    [
        (4, [(0, 1), (2, 3)], "edges"),
        (4, [(0, 1), (2, 3), (2, 3)], "duplicate"),
        (3, [(0, 0), (1, 2)], "self-loop"),
        (4, [(0, 1), (1, 0), (2, 3)], "duplicate"),
        (4, [(0, 1), (0, 2), (1, 2)], "disconnected"),
        (3, [(0, 1), (1, 3)], "outside"),
        (0, [], "order"),
    ],
)
def test_edge_list_rejects_malformed(n, edges, message):
    with pytest.raises(ValueError, match=message):
        tree_from_edge_list(n, edges)


def test_diameter_examples():
    assert diameter(path_tree(5)) == 4
    assert diameter(star_tree(3)) == 2
    assert diameter(path_tree(1)) == 0


def test_diametrical_path_examples():
    assert diametrical_path(path_tree(4)) in ([0, 1, 2, 3], [3, 2, 1, 0])
    path = diametrical_path(star_tree(3))
    assert len(path) == 3 and path[1] == 0
    assert diametrical_path(path_tree(1)) == [0]


def test_centers_examples():
    assert centers(path_tree(5)) == [2]
    assert centers(path_tree(4)) == [1, 2]
    assert centers(star_tree(3)) == [0]


@given(trees(max_n=10))
def test_diameter_matches_all_pairs_oracle(t):
    assert diameter(t) == all_pairs_diameter(t)
    path = diametrical_path(t)
    assert len(path) - 1 == diameter(t)
    assert all(b in t.adjacency[a] for a, b in zip(path, path[1:]))


@given(trees(max_n=14))
def test_center_count_parity(t):
    assert (len(centers(t)) == 1) == (diameter(t) % 2 == 0)


def test_canonical_key_examples():
    p4 = path_tree(4)
    for perm in itertools.permutations(range(4)):
        assert canonical_key(p4.relabel(perm)) == canonical_key(p4)
    assert canonical_key(p4) != canonical_key(star_tree(3))
    assert canonical_key(construct_b(BParams(5, 2, 1))) == canonical_key(
        construct_b(BParams(5, 1, 2))
    )


def test_canonical_key_invariant_under_random_relabelling():
    rng = random.Random(20240611)
    classes = [t for n in range(1, 10) for t in free_trees(n)]
    for _ in range(1000):
        t = rng.choice(classes)
        perm = list(range(t.n))
        rng.shuffle(perm)
        assert canonical_key(t.relabel(perm)) == canonical_key(t)


@pytest.mark.parametrize("n", range(1, 9))
def test_canonical_keys_separate_non_isomorphic_trees(n):
    classes = list(free_trees(n))
    keys = [canonical_key(t) for t in classes]
    for (a, ka), (b, kb) in itertools.combinations(zip(classes, keys), 2):
        assert not brute_isomorphic(a, b)
        assert ka != kb


@given(trees(max_n=9), trees(max_n=9))
@settings(max_examples=300)
def test_canonical_key_agrees_with_brute_force(a, b):
    assert (canonical_key(a) == canonical_key(b)) == brute_isomorphic(a, b)


def test_graph6_examples():
    assert graph6_encode(path_tree(4)) == "Ch"
    assert graph6_decode("Ch").edges() == [(0, 1), (1, 2), (2, 3)]
    assert graph6_encode(path_tree(1)) == "@"
    assert graph6_decode("@").n == 1


@given(trees(max_n=20))
def test_graph6_matches_networkx(t):
    g = nx.Graph()
    g.add_nodes_from(range(t.n))
    g.add_edges_from(t.edges())
    expected = nx.to_graph6_bytes(g, header=False).decode("ascii").strip()
    assert graph6_encode(t) == expected


@given(trees(max_n=20))
def test_graph6_round_trip(t):
    assert graph6_decode(graph6_encode(t)).edges() == t.edges()


@pytest.mark.parametrize(
    "text",
    ["", "C", "Chh", "C h", "~?@?", "Bw", "A?", "A`", "C\x7f", "Dx{"],
)
def test_graph6_decode_rejects_malformed(text):
    with pytest.raises(ValueError):
        graph6_decode(text)


def test_graph6_encode_rejects_large_order():
    with pytest.raises(ValueError, match="62"):
        graph6_encode(path_tree(63))
    assert len(graph6_encode(path_tree(62))) == 1 + (62 * 61 // 2 + 5) // 6
