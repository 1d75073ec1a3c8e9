"""
--- Friedberg ---
Hypothesis validators: the extension property of a class B and reducibility of numberings.
"""
from itertools import combinations
from friedberg.tables import FiniteFun, Periodic, limits_equal, limit_difference
from .report import combine


def finite_subfunctions(limit, cols=4):
    """
    Finite subfunctions of a limit object.

    A total limit is cut to its first cols columns before taking subsets.

    """
    if isinstance(limit, Periodic):
        limit = FiniteFun({c: limit.value_at(c) for c in range(cols)})
    items = limit.items
    for size in range(len(items) + 1):
        for subset in combinations(items, size):
            yield FiniteFun(subset)


def check_extension_hypothesis(class_a, beta, n=3, m=100, cols=4):
    """
    Desk-scale proxy for "every finite subfunction of a member of A has
    infinitely many extensions in B": at least n extensions among the first m members.

    Parameters
    ----------
    class_a : list
        Members of the class A (FiniteFun or Periodic).
    beta : OddEnumeration or ListEnumeration
        Enumeration of the class B.
    n : int
        Required number of extensions.
    m : int
        Number of beta members searched.
    cols : int
        Columns of total members taken into account.

    Returns
    -------
    Verdict
        Condition H, reported as a proxy.

    """
    members = []
    for index in range(m):
        member = beta.member(index)
        if member is None:
            break
        members.append(member)
    problems = []
    for position, a_member in enumerate(class_a):
        for sub in finite_subfunctions(a_member, cols):
            count = sum(1 for member in members if member.extends(sub))
            if count < n:
                problems.append('member %i: {%s} has %i < %i extensions among the first %i' % (
                    position, sub.canonical(), count, n, m))
                break
        if problems:
            break
    return combine('H', problems, [], 'proxy', 'N=%i M=%i' % (n, m))


def check_reducibility_witness(nu, mu, f, window=64):
    """
    Check nu(i) = mu(f(i)) as limit objects for every i below window.

    Parameters
    ----------
    nu, mu : sequence
        Limit objects by index (None for unknown).
    f : FiniteFun
        Reduction, defined on the indices of nu.

    Returns
    -------
    Verdict
        Holds, violated with an index and column witness, or pending.

    """
    problems, pending = [], []
    for i in range(min(window, len(nu))):
        target = f.get(i)
        if target is None:
            problems.append('f is undefined at %i' % i)
            continue
        if target >= len(mu):
            pending.append('mu(%i) is not declared' % target)
            continue
        equal = limits_equal(nu[i], mu[target])
        if equal is None:
            pending.append('nu(%i) or mu(%i) is unknown' % (i, target))
        elif not equal:
            col = limit_difference(nu[i], mu[target])
            problems.append('nu(%i) != mu(f(%i)) = mu(%i) at col %i' % (i, i, target, col))
    return combine('RED', problems, pending)


def class_a_members(a_limits):
    """Known A-limits in row order, without repetitions."""
    members = []
    for _, limit in sorted(a_limits.items()):
        if limit is not None and limit not in members:
            members.append(limit)
    return members
