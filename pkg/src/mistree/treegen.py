"""One representative per isomorphism class of free trees, bucketed by diameter.

Trees are generated as centre-rooted canonical level sequences: rooted trees
come out in decreasing lexicographic order (Beyer-Hedetniemi successor) and
the ones that are not the canonical rooting of their free tree are skipped in
blocks (Wright, Richmond, Odlyzko and McKay).
"""

from __future__ import annotations

import json
import os
import tempfile
from collections import defaultdict
from pathlib import Path
from typing import Iterator

from .treekit import Tree, diameter, graph6_decode, graph6_encode, tree_from_edge_list

DEFAULT_CAP = 16
HARD_CAP = 18
GENERATOR_VERSION = "mistree-levelseq-1"


def _check_order(n: int, cap: int) -> None:
    if cap > HARD_CAP:
        raise ValueError(f"order cap may be raised to at most {HARD_CAP}, got {cap}")
    if not 1 <= n <= cap:
        raise ValueError(f"tree order must be in 1..{cap}, got {n}")


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    """Successor of a rooted level sequence, or None after the star."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    shift = p - q
    for i in range(p, len(out)):
        out[i] = out[i - shift]
    return out


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    """Split off the first root subtree: (that subtree rebased to level 0, the rest)."""
    m = len(levels)
    for i in range(2, len(levels)):
        if levels[i] == 1:
            m = i
            break
    left = [x - 1 for x in levels[1:m]]
    rest = [0] + levels[m:]
    return left, rest


def _canonical_or_jump(levels: list[int]) -> tuple[bool, list[int] | None]:
    left, rest = _split(levels)
    lh, rh = max(left), max(rest)
    valid = rh > lh or (
        rh == lh and (len(left) < len(rest) or (len(left) == len(rest) and left <= rest))
    )
    if valid:
        return True, levels
    p = len(left)
    nxt = _next_rooted(levels, p)
    if nxt is not None and levels[p] > 2:
        new_left, _ = _split(nxt)
        h = max(new_left)
        nxt[len(nxt) - (h + 1) :] = range(1, h + 2)
    return False, nxt


def _level_sequences(n: int) -> Iterator[list[int]]:
    if n == 1:
        yield [0]
        return
    if n == 2:
        yield [0, 1]
        return
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        ok, levels = _canonical_or_jump(levels)
        if ok:
            yield levels
            levels = _next_rooted(levels)


def _tree_from_levels(levels: list[int]) -> Tree:
    edges = []
    stack: list[int] = []
    for v, lev in enumerate(levels):
        del stack[lev:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return tree_from_edge_list(len(levels), edges)


def free_trees(n: int, cap: int = DEFAULT_CAP) -> Iterator[Tree]:
    """Every free tree on ``n`` vertices exactly once, in a fixed order."""
    _check_order(n, cap)
    for levels in _level_sequences(n):
        yield _tree_from_levels(levels)


def count_free_trees(n: int, cap: int = DEFAULT_CAP) -> int:
    _check_order(n, cap)
    return sum(1 for _ in _level_sequences(n))


def _check_diameter(n: int, d: int) -> None:
    if n == 1:
        if d != 0:
            raise ValueError("the single-vertex tree has diameter 0")
        return
    if not 1 <= d < n:
        raise ValueError(f"no tree on {n} vertices has diameter {d} (need 1 <= d < n)")


def trees_with_diameter(
    n: int, d: int, cap: int = DEFAULT_CAP, cache_dir: str | os.PathLike | None = None
) -> Iterator[Tree]:
    _check_order(n, cap)
    _check_diameter(n, d)
    if cache_dir is not None:
        order_dir = Path(cache_dir) / f"n{n}"
        cached = _load_cached(order_dir, n, only=d)
        if cached is None:
            cached = diameter_buckets(n, cap=cap, cache_dir=cache_dir)
        yield from cached.get(d, [])
        return
    for t in free_trees(n, cap):
        if diameter(t) == d:
            yield t


def _bucket(n: int, cap: int) -> dict[int, list[Tree]]:
    buckets: dict[int, list[Tree]] = defaultdict(list)
    for t in free_trees(n, cap):
        buckets[diameter(t)].append(t)
    return dict(sorted(buckets.items()))


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load_cached(order_dir: Path, n: int, only: int | None = None) -> dict[int, list[Tree]] | None:
    manifest = order_dir / "manifest.json"
    try:
        meta = json.loads(manifest.read_text())
    except (OSError, ValueError):
        return None
    if meta.get("generator") != GENERATOR_VERSION or meta.get("n") != n:
        return None
    counts = meta.get("diameters", {})
    if sum(counts.values()) != meta.get("total"):
        return None
    buckets: dict[int, list[Tree]] = {}
    for key, count in counts.items():
        d = int(key)
        if only is not None and d != only:
            continue
        try:
            lines = (order_dir / f"d{d}.g6").read_text(encoding="ascii").splitlines()
            trees = [graph6_decode(line) for line in lines if line]
        except (OSError, ValueError):
            return None
        if len(trees) != count:
            return None
        buckets[d] = trees
    return dict(sorted(buckets.items()))


def diameter_buckets(
    n: int, cap: int = DEFAULT_CAP, cache_dir: str | os.PathLike | None = None
) -> dict[int, list[Tree]]:
    """All free trees on ``n`` vertices grouped by diameter, optionally via the disk cache.

    Cache layout is ``<cache_dir>/n<N>/d<D>.g6`` plus ``manifest.json`` holding the
    per-diameter counts and the generator version; a stale or damaged entry is rebuilt.
    """
    _check_order(n, cap)
    if cache_dir is None:
        return _bucket(n, cap)
    order_dir = Path(cache_dir) / f"n{n}"
    cached = _load_cached(order_dir, n)
    if cached is not None:
        return cached
    buckets = _bucket(n, cap)
    for d, trees in buckets.items():
        _atomic_write(order_dir / f"d{d}.g6", "".join(graph6_encode(t) + "\n" for t in trees))
    meta = {
        "generator": GENERATOR_VERSION,
        "n": n,
        "total": sum(len(b) for b in buckets.values()),
        "diameters": {str(d): len(b) for d, b in buckets.items()},
    }
    _atomic_write(order_dir / "manifest.json", json.dumps(meta, indent=2, sort_keys=True) + "\n")
    return buckets
