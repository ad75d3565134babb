import pytest
from hypothesis import given
from hypothesis import strategies as st

from mistree.formulas import (
    BParams,
    argmax_m,
    big_m,
    candidate_maximizers,
    construct_b,
    minimizer_family,
    psi,
)
from mistree.miscount import count_mis
from mistree.treegen import trees_with_diameter
from mistree.treekit import canonical_key, diameter, path_tree

PSI_TABLE = [1, 1, 2, 2, 3, 4, 5, 7, 9, 12, 16, 21, 28, 37, 49, 65]


def test_psi_table():
    assert [psi(n) for n in range(16)] == PSI_TABLE


def test_psi_examples():
    assert psi(0) == 1
    assert psi(10) == 16
    assert psi(15) == 65
    assert psi(25) == 1081
    with pytest.raises(ValueError):
        psi(-1)


def test_psi_recurrence():
    for n in range(3, 61):
        assert psi(n) == psi(n - 2) + psi(n - 3)


def test_psi_is_path_count():
    for n in range(1, 31):
        assert psi(n) == count_mis(path_tree(n))


@pytest.mark.parametrize(
    "n, d, expected",
    [(9, 6, 13), (8, 6, 8), (11, 7, 21), (10, 6, 16), (9, 4, 16), (10, 4, 17), (12, 5, 33)],
)
def test_big_m_examples(n, d, expected):
    assert big_m(n, d) == expected


def test_big_m_matches_exhaustive_maximum_at_9_6():
    assert max(count_mis(t) for t in trees_with_diameter(9, 6)) == 13


@pytest.mark.parametrize("n, d", [(5, 3), (5, 5), (6, 7), (3, 2)])
def test_big_m_domain(n, d):
    with pytest.raises(ValueError):
        big_m(n, d)


def test_m5_closed_forms():
    for n in range(9, 80, 2):
        assert big_m(n, 5) == 3 * 2 ** ((n - 5) // 2)
    for n in range(8, 81, 2):
        assert big_m(n, 5) == 1 + 4 * 2 ** ((n - 6) // 2)


@given(st.integers(4, 40), st.integers(1, 40))
def test_prop3_monotonicity(d, extra):
    n = d + 1 + extra
    if (n - d) % 2 == 1 and n >= d + 3:
        assert big_m(n, d) > big_m(n, d + 1)
    if (n - d) % 2 == 0:
        assert big_m(n, d) <= big_m(n, d + 1)
        assert (big_m(n, d) == big_m(n, d + 1)) == (d == 4)
    if n >= d + 3:
        assert big_m(n, d) >= big_m(n, d + 2)
        assert (big_m(n, d) == big_m(n, d + 2)) == (d == 5 and n % 2 == 0)


def test_argmax_examples():
    assert argmax_m(12, 4, 11) == {4, 5, 7}
    assert {big_m(12, d) for d in (4, 5, 7)} == {33}
    assert argmax_m(20, 6, 19) == {7}
    assert argmax_m(13, 6, 12) == {6}
    with pytest.raises(ValueError):
        argmax_m(12, 3, 11)
    with pytest.raises(ValueError):
        argmax_m(12, 6, 5)


def test_construct_b_examples():
    assert canonical_key(construct_b(BParams(3, 1, 1))) == canonical_key(path_tree(4))
    b = construct_b(BParams(6, 2, 2))
    assert (b.n, diameter(b), count_mis(b)) == (9, 6, 7)
    for bad in (BParams(5, 0, 1), BParams(5, 1, 0), BParams(1, 1, 1)):
        with pytest.raises(ValueError):
            construct_b(bad)


def test_construct_b_order_and_diameter():
    for d in range(2, 12):
        for p in range(1, 5):
            for q in range(1, 5):
                params = BParams(d, p, q)
                t = construct_b(params)
                assert t.n == params.order == d - 1 + p + q
                assert diameter(t) == d


def test_minimizer_family_examples():
    fam = minimizer_family(9, 6)
    assert {canonical_key(t) for t in fam} == {
        canonical_key(construct_b(BParams(6, 1, 3))),
        canonical_key(construct_b(BParams(6, 2, 2))),
    }
    assert len(fam) == 2
    assert [canonical_key(t) for t in minimizer_family(7, 6)] == [canonical_key(path_tree(7))]
    assert len(minimizer_family(6, 3)) == 2
    with pytest.raises(ValueError):
        minimizer_family(6, 2)


def test_minimizer_family_size():
    for n in range(4, 20):
        for d in range(3, n):
            spare = n - d + 1
            assert len(minimizer_family(n, d)) == spare // 2


def test_spider_candidates():
    (spider,) = [c for c in candidate_maximizers(9, 4) if c.tag == "spider"]
    assert spider.params == (4,) and count_mis(spider.tree) == 16 == big_m(9, 4)
    (plus,) = [c for c in candidate_maximizers(10, 4) if c.tag == "spider+leaf"]
    assert plus.params == (4,) and count_mis(plus.tree) == 17 == big_m(10, 4)


def test_pendant_path_candidate_at_9_6():
    (cand,) = [c for c in candidate_maximizers(9, 6) if c.tag == "path+2paths"]
    assert cand.params == (2,)
    assert cand.tree.n == 9 and diameter(cand.tree) == 6
    assert count_mis(cand.tree) == 13


def test_candidates_have_declared_order_and_diameter():
    for n in range(5, 22):
        for d in range(4, n):
            cands = candidate_maximizers(n, d)
            keys = [canonical_key(c.tree) for c in cands]
            assert len(keys) == len(set(keys))
            for c in cands:
                assert c.tree.n == n and diameter(c.tree) == d
                assert count_mis(c.tree) <= big_m(n, d)
