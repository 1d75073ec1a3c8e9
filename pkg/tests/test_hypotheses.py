"""
--- Friedberg ---
Tests the extension-hypothesis proxy.
"""
from friedberg import FiniteFun
from friedberg.tables import constant
from friedberg.strategies import OddEnumeration, ListEnumeration
from friedberg.referee import check_extension_hypothesis, finite_subfunctions


class_a = [FiniteFun(), FiniteFun({0: 0, 1: 0}), FiniteFun({0: 0, 1: 1}), FiniteFun({0: 1, 1: 0}),
           FiniteFun({0: 1, 1: 1}), FiniteFun({0: 0, 2: 0})]


def test_finite_subfunctions():
    """Tests subfunctions of finite and total limits."""
    subs = list(finite_subfunctions(FiniteFun({0: 0, 2: 0})))
    assert subs == [FiniteFun(), FiniteFun({0: 0}), FiniteFun({2: 0}), FiniteFun({0: 0, 2: 0})]
    assert len(list(finite_subfunctions(constant(1), cols=2))) == 4
    assert FiniteFun({0: 1, 1: 1}) in finite_subfunctions(constant(1), cols=2)


def test_extension_hypothesis_holds_for_odd_functions():
    """Tests the even-support class against the canonical odd enumeration."""
    verdict = check_extension_hypothesis(class_a, OddEnumeration(), 3, 100)
    assert verdict.status == 'holds'
    assert verdict.subject == 'proxy'
    assert verdict.detail == 'N=3 M=100'


def test_extension_hypothesis_fails_for_short_list():
    """Tests a class B with too few extensions."""
    beta = ListEnumeration([FiniteFun({0: 0}), FiniteFun({0: 0, 1: 0, 2: 0})])
    verdict = check_extension_hypothesis(class_a, beta, 3, 100)
    assert verdict.status == 'violated'
    assert verdict.detail.startswith('member 0: {-} has 2 < 3 extensions')


def test_extension_hypothesis_counts_within_m():
    """Tests that only the first M members are searched."""
    assert check_extension_hypothesis([FiniteFun({0: 1, 1: 1})], OddEnumeration(), 3, 9).status == 'violated'
    assert check_extension_hypothesis([FiniteFun({0: 1, 1: 1})], OddEnumeration(), 3, 70).status == 'holds'
