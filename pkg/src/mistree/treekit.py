"""Tree representation, structural metrics, canonical keys and the graph6 codec."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

Edge = tuple[int, int]

GRAPH6_MAX_ORDER = 62


@dataclass(frozen=True)
class Tree:
    """Undirected tree on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``. Build trees
    with :func:`tree_from_edge_list` so the invariants are checked.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def leaves(self) -> list[int]:
        if self.n == 1:
            return []
        return [v for v in range(self.n) if len(self.adjacency[v]) == 1]

    def relabel(self, perm: Sequence[int]) -> "Tree":
        """Return the tree with vertex ``v`` renamed to ``perm[v]``."""
        return tree_from_edge_list(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={self.edges()})"


def tree_from_edge_list(n: int, edges: Iterable[Edge]) -> Tree:
    if n < 1:
        raise ValueError(f"tree order must be >= 1, got {n}")
    edges = [(int(u), int(v)) for u, v in edges]
    if len(edges) != n - 1:
        raise ValueError(f"a tree on {n} vertices needs {n - 1} edges, got {len(edges)}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if v in adj[u]:
            raise ValueError(f"duplicate edge ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
    adjacency = tuple(tuple(sorted(a)) for a in adj)
    if len(_bfs_order(adjacency, 0)) != n:
        raise ValueError("edge list is disconnected")
    return Tree(n, adjacency)


def path_tree(n: int) -> Tree:
    return tree_from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(leaves: int) -> Tree:
    """K_{1,leaves} with the centre at vertex 0."""
    return tree_from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def _bfs_order(adjacency: Sequence[Sequence[int]], source: int) -> list[int]:
    seen = {source}
    order = [source]
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if v not in seen:
                seen.add(v)
                order.append(v)
                queue.append(v)
    return order


def bfs_distances(t: Tree, source: int) -> tuple[list[int], list[int]]:
    """Distances and BFS parents from ``source`` (parent of the source is -1)."""
    dist = [-1] * t.n
    parent = [-1] * t.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in t.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                parent[v] = u
                queue.append(v)
    return dist, parent


def _farthest(dist: list[int]) -> int:
    # lowest id among the farthest vertices
    best = max(dist)
    return dist.index(best)


def diametrical_path(t: Tree) -> list[int]:
    """A longest path, found by two breadth-first sweeps with lowest-id tie-breaking."""
    dist0, _ = bfs_distances(t, 0)
    a = _farthest(dist0)
    dist, parent = bfs_distances(t, a)
    b = _farthest(dist)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def diameter(t: Tree) -> int:
    return len(diametrical_path(t)) - 1


def centers(t: Tree) -> list[int]:
    path = diametrical_path(t)
    length = len(path) - 1
    if length % 2 == 0:
        return [path[length // 2]]
    return sorted(path[length // 2 : length // 2 + 2])


def _rooted_code(t: Tree, root: int, banned: int) -> str:
    """AHU-style encoding of the subtree hanging from ``root`` (``banned`` is its parent)."""
    order = [root]
    parent = {root: banned}
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for v in t.adjacency[u]:
            if v != parent[u]:
                parent[v] = u
                order.append(v)
    codes: dict[int, list[str]] = {u: [] for u in order}
    code = ""
    for u in reversed(order):
        kids = codes.pop(u)
        kids.sort()
        code = "(" + "".join(kids) + ")"
        if u != root:
            codes[parent[u]].append(code)
    return code


def canonical_key(t: Tree) -> bytes:
    """Byte string equal for two trees exactly when they are isomorphic.

    Unicentral trees are encoded from their centre; bicentral trees are cut at
    the central edge and the two rooted halves are concatenated in sorted order.
    """
    cs = centers(t)
    if len(cs) == 1:
        return b"C" + _rooted_code(t, cs[0], -1).encode("ascii")
    a, b = cs
    halves = sorted([_rooted_code(t, a, b), _rooted_code(t, b, a)])
    return b"E" + "".join(halves).encode("ascii")


def graph6_encode(t: Tree) -> str:
    n = t.n
    if n > GRAPH6_MAX_ORDER:
        raise ValueError(f"graph6 short form supports n <= {GRAPH6_MAX_ORDER}, got {n}")
    bits: list[int] = []
    for j in range(1, n):
        nbrs = t.adjacency[j]
        for i in range(j):
            bits.append(1 if i in nbrs else 0)
    bits.extend([0] * (-len(bits) % 6))
    chars = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        chars.append(chr(63 + value))
    return "".join(chars)


def graph6_decode(s: str) -> Tree:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ValueError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise ValueError(f"invalid graph6 character {ch!r}")
    if s[0] == "~":
        raise ValueError(f"graph6 long form (n > {GRAPH6_MAX_ORDER}) is not supported")
    n = ord(s[0]) - 63
    if n < 1:
        raise ValueError("graph6 string encodes an empty graph")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(s) != expected:
        raise ValueError(f"graph6 length {len(s)} does not match n={n} (expected {expected})")
    value_bits: list[int] = []
    for ch in s[1:]:
        v = ord(ch) - 63
        value_bits.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    if any(value_bits[nbits:]):
        raise ValueError("graph6 padding bits are not zero")
    edges: list[Edge] = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if value_bits[k]:
                edges.append((i, j))
            k += 1
    return tree_from_edge_list(n, edges)
