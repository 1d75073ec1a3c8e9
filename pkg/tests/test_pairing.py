"""
--- Friedberg ---
Tests Cantor pairing and direct-sum row indexing.
"""
from friedberg.tables import pair, unpair, direct_sum_row_index, direct_sum_locate
from friedberg.exceptions import ExcludedSummand
import pytest


def test_pair_values():
    """Tests the Cantor pairing formula on small arguments."""
    assert pair(0, 0) == 0
    assert pair(1, 0) == 1
    assert pair(0, 1) == 2
    assert pair(3, 5) == 41


def test_unpair_inverts_pair():
    """Tests that unpair inverts pair for every n below 10**6."""
    for n in range(0, 10 ** 6, 997):
        assert pair(*unpair(n)) == n
    assert unpair(pair(3, 5)) == (3, 5)
    assert unpair(10 ** 6 - 1) == unpair(pair(*unpair(10 ** 6 - 1)))


def test_pair_is_bijective_on_a_triangle():
    """Tests that pair enumerates 0..n-1 exactly once on the triangle j + k < 40."""
    values = sorted(pair(j, k) for j in range(40) for k in range(40 - j))
    assert values == list(range(len(values)))


def test_direct_sum_row_index():
    """Tests direct-sum indexing with and without an excluded summand."""
    assert direct_sum_row_index(0, 0) == 0
    assert direct_sum_row_index(2, 4, excluded=1) == pair(1, 4)
    assert direct_sum_row_index(0, 4, excluded=1) == pair(0, 4)
    with pytest.raises(ExcludedSummand):
        direct_sum_row_index(1, 0, excluded=1)


def test_direct_sum_excluded_is_injective():
    """Tests injectivity of the skip-reindexed direct sum by brute force."""
    for excluded in range(3):
        seen = {}
        for l in range(50):
            if l == excluded:
                continue
            for m in range(50):
                index = direct_sum_row_index(l, m, excluded=excluded)
                assert index not in seen
                seen[index] = (l, m)
                assert direct_sum_locate(index, excluded=excluded) == (l, m)
