"""Closed forms for the extremal m.i.s. counts and the tree families that realise them."""

from __future__ import annotations

from dataclasses import dataclass

from .treekit import Edge, Tree, canonical_key, tree_from_edge_list


def psi(n: int) -> int:
    """m.i.s. count of the path on ``n`` vertices: psi(n) = psi(n-2) + psi(n-3)."""
    if n < 0:
        raise ValueError(f"psi is defined for n >= 0, got {n}")
    a, b, c = 1, 1, 2  # psi(0), psi(1), psi(2)
    for _ in range(n):
        a, b, c = b, c, a + b
    return a


def _check_m_domain(n: int, d: int) -> None:
    if not 4 <= d <= n - 1:
        raise ValueError(f"M(n, d) is defined for 4 <= d <= n-1, got n={n}, d={d}")


def big_m(n: int, d: int) -> int:
    """Maximum m.i.s. count over trees with ``n`` vertices and diameter ``d``."""
    _check_m_domain(n, d)
    gap = n - d
    if gap % 2 == 1:
        return psi(d - 1) + (2 ** ((gap + 1) // 2) - 1) * psi(d - 2)
    if gap == 2:
        return psi(d - 2) + psi(d)
    value = 2 ** (gap // 2) * psi(d - 1)
    if d in (4, 7):
        value += 1
    return value


def argmax_m(n: int, d_lo: int, d_hi: int) -> set[int]:
    """Diameters in ``[d_lo, d_hi]`` maximising big_m(n, .), by direct evaluation."""
    if d_lo > d_hi:
        raise ValueError(f"empty diameter range [{d_lo}, {d_hi}]")
    _check_m_domain(n, d_lo)
    _check_m_domain(n, d_hi)
    values = {d: big_m(n, d) for d in range(d_lo, d_hi + 1)}
    best = max(values.values())
    return {d for d, v in values.items() if v == best}


@dataclass(frozen=True)
class BParams:
    d: int
    p: int
    q: int

    @property
    def order(self) -> int:
        return self.d - 1 + self.p + self.q


def construct_b(params: BParams) -> Tree:
    """Double broom: a path on d-1 vertices with p leaves at one end and q at the other.

    Path vertices are ``0..d-2``; the p leaves hang from 0 and the q leaves from d-2.
    """
    d, p, q = params.d, params.p, params.q
    if d < 2:
        raise ValueError(f"double broom needs d >= 2, got {d}")
    if p < 1 or q < 1:
        raise ValueError(f"double broom needs p, q >= 1, got p={p}, q={q}")
    edges: list[Edge] = [(i, i + 1) for i in range(d - 2)]
    nxt = d - 1
    for _ in range(p):
        edges.append((0, nxt))
        nxt += 1
    for _ in range(q):
        edges.append((d - 2, nxt))
        nxt += 1
    return tree_from_edge_list(nxt, edges)


def minimizer_family(n: int, d: int) -> list[Tree]:
    """Every double broom with n vertices and diameter d, one per isomorphism class."""
    if not 3 <= d < n:
        raise ValueError(f"minimizer family needs 3 <= d < n, got n={n}, d={d}")
    seen: set[bytes] = set()
    out = []
    for p in range(1, n - d + 1):
        t = construct_b(BParams(d, p, n - d + 1 - p))
        key = canonical_key(t)
        if key not in seen:
            seen.add(key)
            out.append(t)
    return out


@dataclass(frozen=True)
class Candidate:
    """A tree from one of the parametric families tried as maximizers.

    ``tag`` names the family: ``spider``, ``spider+leaf``, ``path+leaf``, ``path+2paths``,
    ``path+2paths+leaf``, ``path+split2paths``, ``path+split2paths+leaf`` or
    ``double-broom``.
    """

    tag: str
    params: tuple[int, ...]
    tree: Tree


def _spider(legs: int, extra_leaf: bool) -> Tree:
    edges = []
    for i in range(legs):
        mid, end = 1 + 2 * i, 2 + 2 * i
        edges += [(0, mid), (mid, end)]
    n = 2 * legs + 1
    if extra_leaf:
        edges.append((0, n))
        n += 1
    return tree_from_edge_list(n, edges)


def _path_with_pendants(d: int, attach: dict[int, int], leaf_at: int | None) -> Tree:
    """Path v_0..v_d with ``attach[i]`` pendant 2-paths at v_i and optionally a leaf."""
    edges: list[Edge] = [(i, i + 1) for i in range(d)]
    nxt = d + 1
    for at, count in sorted(attach.items()):
        for _ in range(count):
            edges += [(at, nxt), (nxt, nxt + 1)]
            nxt += 2
    if leaf_at is not None:
        edges.append((leaf_at, nxt))
        nxt += 1
    return tree_from_edge_list(nxt, edges)


def candidate_maximizers(n: int, d: int) -> list[Candidate]:
    """Trees of order n and diameter d drawn from the candidate maximizer families.

    Families whose parameters cannot meet (n, d) are skipped. Isomorphic
    duplicates across families are dropped, keeping the first tag listed above.
    """
    _check_m_domain(n, d)
    found: list[Candidate] = []

    if d == 4 and n % 2 == 1:
        found.append(Candidate("spider", ((n - 1) // 2,), _spider((n - 1) // 2, False)))
    if d == 4 and n % 2 == 0 and n >= 6:
        found.append(Candidate("spider+leaf", ((n - 2) // 2,), _spider((n - 2) // 2, True)))

    spare = n - d - 1
    leaf_spots = sorted({i for i in (2, 3, d - 2) if 2 <= i <= d - 2})
    if spare == 1:
        for i in range(2, d // 2 + 1):
            found.append(Candidate("path+leaf", (i,), _path_with_pendants(d, {}, i)))
    if spare >= 2 and spare % 2 == 0:
        t = spare // 2
        found.append(Candidate("path+2paths", (t + 1,), _path_with_pendants(d, {2: t}, None)))
    if spare >= 3 and spare % 2 == 1:
        t = (spare - 1) // 2
        for i in leaf_spots:
            found.append(
                Candidate("path+2paths+leaf", (t + 1, i), _path_with_pendants(d, {2: t}, i))
            )
    if d >= 5:
        for extra in (0, 1):
            pairs = spare - extra
            if pairs < 4 or pairs % 2:
                continue
            total = pairs // 2
            for left in range(1, total):
                attach = {2: left, d - 2: total - left}
                if not extra:
                    if left <= total - left:
                        found.append(
                            Candidate(
                                "path+split2paths",
                                (left, total - left),
                                _path_with_pendants(d, attach, None),
                            )
                        )
                    continue
                for i in leaf_spots:
                    found.append(
                        Candidate(
                            "path+split2paths+leaf",
                            (left, total - left, i),
                            _path_with_pendants(d, attach, i),
                        )
                    )
    for p in range(1, n - d + 1):
        q = n - d + 1 - p
        found.append(Candidate("double-broom", (d, p, q), construct_b(BParams(d, p, q))))

    seen: set[bytes] = set()
    unique = []
    for c in found:
        key = canonical_key(c.tree)
        if key not in seen:
            seen.add(key)
            unique.append(c)
    return unique
