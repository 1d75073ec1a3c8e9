"""
--- Friedberg ---
Cantor pairing and direct-sum row indexing.
"""
from math import isqrt
from friedberg.exceptions import ExcludedSummand


def pair(j, k):
    """
    Cantor pairing (j + k)(j + k + 1) / 2 + k.

    Examples
    --------
    >>> pair(1, 0), pair(0, 1)
    (1, 2)

    """
    return (j + k) * (j + k + 1) // 2 + k


def unpair(n):
    """
    Inverse of the Cantor pairing.

    Returns
    -------
    tuple
        (j, k) with pair(j, k) == n.

    """
    w = (isqrt(8 * n + 1) - 1) // 2
    k = n - w * (w + 1) // 2
    return w - k, k


def direct_sum_row_index(l, m, excluded=None):
    """
    Row index of row m of summand l in a direct sum of tables.

    With an excluded summand k, the remaining summands are renumbered in order
    (l -> l for l < k, l -> l - 1 for l > k) before pairing.

    Raises
    ------
    ExcludedSummand
        If l is the excluded summand.

    """
    if excluded is None:
        return pair(l, m)
    if l == excluded:
        raise ExcludedSummand('Summand %i is excluded from the direct sum' % l)
    return pair(l if l < excluded else l - 1, m)


def direct_sum_locate(index, excluded=None):
    """
    Inverse of direct_sum_row_index.

    Returns
    -------
    tuple
        (l, m): summand (table) number and row in that summand.

    """
    p, m = unpair(index)
    if excluded is None or p < excluded:
        return p, m
    return p + 1, m
