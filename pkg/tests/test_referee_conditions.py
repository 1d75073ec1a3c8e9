"""
--- Friedberg ---
Tests the winner conditions decided on limit objects and the referee reports.
"""
from friedberg import FiniteTable, FiniteFun
from friedberg.tables import constant
from friedberg.strategies import OddEnumeration, FillFunction
from friedberg.referee import (Slot, Verdict, RowProvenance, check_coverage, check_injectivity, check_diag_g2,
                               check_nonreduction, check_faithfulness, check_finite_support, check_fill_cover,
                               combine, parse_report, reports_agree, report_differences, EnumeratorCursor,
                               awaiting_rows)
from friedberg.referee.report import RefereeReport
import pytest


def test_coverage_holds():
    """Tests coverage of finite and total A-limits by known rows."""
    a_limits = {0: FiniteFun({0: 1}), 1: constant(2)}
    rows = {0: ('mirror', FiniteFun({0: 1})), 1: ('constant', constant(2)), 2: ('odd', FiniteFun({3: 0}))}
    assert check_coverage(a_limits, rows).status == 'holds'


def test_coverage_violated_and_pending():
    """Tests a missing limit and an unknown row."""
    a_limits = {0: FiniteFun({0: 1}), 1: constant(2)}
    verdict = check_coverage(a_limits, {0: ('mirror', FiniteFun({0: 1}))})
    assert verdict.status == 'violated'
    assert verdict.detail == 'A-row 1 limit periodic(2) is absent'
    rows = {0: ('mirror', FiniteFun({0: 1})), 1: ('mirror', None)}
    assert check_coverage(a_limits, rows).status == 'pending'
    assert check_coverage({0: None}, {}).status == 'pending'


def test_coverage_by_slots():
    """Tests limits placed later by exhaustion assistants."""
    assert check_coverage({0: constant(3)}, {}, [Slot('const', 2)]).status == 'holds'
    assert check_coverage({0: constant(1)}, {}, [Slot('const', 2)]).status == 'violated'
    odd = Slot('odd', 2, OddEnumeration())
    assert check_coverage({0: FiniteFun({1: 1})}, {}, [odd]).status == 'holds'
    assert check_coverage({0: FiniteFun({0: 0})}, {}, [odd]).status == 'violated'


def test_coverage_odd_pending():
    """Tests that uncovered odd limits await the copier in pp65."""
    a_limits = {0: FiniteFun({0: 7})}
    assert check_coverage(a_limits, {}).status == 'violated'
    assert check_coverage(a_limits, {}, odd_pending=True).status == 'pending'


def test_coverage_awaiting_mirror():
    """Tests A-rows whose mirror assistant holds no row."""
    a_limits = {0: FiniteFun(), 1: FiniteFun({5: 1}), 2: FiniteFun({5: 1})}
    rows = {0: ('mirror', FiniteFun()), 1: ('odd', FiniteFun({0: 0}))}
    assert check_coverage(a_limits, rows).status == 'violated'
    verdict = check_coverage(a_limits, rows, awaiting={1, 2})
    assert verdict.status == 'pending'
    assert verdict.detail == 'A-row 1 awaits its mirror assistant; A-row 2 awaits its mirror assistant'
    verdict = check_coverage(a_limits, rows, awaiting={2})
    assert verdict.status == 'violated'
    assert verdict.detail == 'A-row 1 limit {5:1} is absent'


def test_awaiting_rows():
    """Tests the A-rows left open by the mirror cursors of a table."""
    cursors = [EnumeratorCursor('B', 'odd', 3), EnumeratorCursor('B', 'mains', 5),
               EnumeratorCursor('B', 'await', 1), EnumeratorCursor('C', 'await', 2)]
    assert awaiting_rows(cursors, 'B', 8) == {1, 5, 6, 7}
    assert awaiting_rows(cursors, 'B', 4) == {1}
    assert awaiting_rows(cursors, 'C', 3) == {0, 1, 2}


def test_injectivity():
    """Tests duplicate limits, the window and invalid rows."""
    rows = {0: ('mirror', FiniteFun()), 1: ('odd', FiniteFun({0: 0})), 2: ('mirror', FiniteFun())}
    verdict = check_injectivity(rows, 64)
    assert verdict.status == 'violated'
    assert verdict.detail == 'rows 0 and 2 both limit to {-}'
    assert check_injectivity(rows, 2).status == 'holds'
    rows[2] = ('invalid', FiniteFun())
    assert check_injectivity(rows, 64).status == 'holds'


def test_diagonal_condition():
    """Tests the g2 diagonal condition and its witness text."""
    a_limits = {0: constant(1), 1: FiniteFun({0: 5})}
    rows = {1: ('odd', FiniteFun({0: 0}))}
    verdicts = check_diag_g2(a_limits, rows, 8)
    assert verdicts == [Verdict('3', 'holds', 'i=0')]
    assert verdicts[0].detail == 'j=0 B-row 1 col=0'
    assert check_diag_g2(a_limits, {}, 8)[0].status == 'pending'
    assert check_diag_g2({1: FiniteFun({0: 5})}, rows, 8)[0].detail == 'vacuous'


def test_nonreduction():
    """Tests the non-reduction condition with the constant row tried first."""
    r_limits = {0: constant(1)}
    src = {0: ('mirror', FiniteFun()), 3: ('constant', constant(1))}
    dst = {1: ('odd', FiniteFun({0: 0}))}
    verdicts = check_nonreduction(r_limits, lambda s: src, lambda s, v: ('C-row %i' % v, dst.get(v, (0, None))[1]),
                                  lambda s: 3, 8, '5', lambda i: ['i=%i' % i])
    assert verdicts == [Verdict('5', 'holds', 'i=0')]
    assert verdicts[0].detail.startswith('j=3 C-row 1 ')
    vacuous = check_nonreduction({0: FiniteFun()}, None, None, None, 8, '5', None)
    assert vacuous == [Verdict('5', 'holds', '*')]


def test_faithfulness():
    """Tests rows against their provenance records."""
    A = FiniteTable('A', cells=[(0, 0, 7), (0, 1, 1)])
    tables = {'B': FiniteTable('B', cells=[(0, 0, 7), (1, 0, 0), (2, 0, 4), (2, 1, 4)])}
    provenance = [RowProvenance('B', 0, 'mirror', 0, (1, 1)), RowProvenance('B', 1, 'odd', FiniteFun({0: 0})),
                  RowProvenance('B', 2, 'constant', 4)]
    assert check_faithfulness(provenance, tables, A).status == 'holds'
    held = [RowProvenance('B', 0, 'mirror', 0, (0, 7))]
    assert check_faithfulness(held, tables, A).status == 'violated'
    assert check_faithfulness(held, tables, A, held_hidden=False).status == 'holds'
    wrong = [RowProvenance('B', 2, 'constant', 5)]
    assert check_faithfulness(wrong, tables, A).detail == 'B-row 2 is not constant 5 at col 0'


def test_finite_support():
    """Tests that released rows have finite limits."""
    rows = {0: ('odd', FiniteFun({0: 1})), 1: ('released', constant(2)), 2: ('mirror', constant(3))}
    verdict = check_finite_support(rows, ('released',), 'released')
    assert verdict.status == 'violated'
    assert verdict.detail == 'row 1 limits to the total periodic(2)'
    assert check_finite_support(rows, ('odd',), 'odd').status == 'holds'


def test_fill_cover():
    """Tests g <= f u h over fill cells and A-limits."""
    fill = FillFunction()
    rows = {0: ('odd', FiniteFun({4: 4})), 1: ('released', FiniteFun({0: 7, 3: 3}))}
    kinds = ('odd', 'released')
    assert check_fill_cover(rows, kinds, {0: FiniteFun({0: 7})}, fill, 'nonmirror').status == 'holds'
    verdict = check_fill_cover(rows, kinds, {}, fill, 'nonmirror')
    assert verdict.status == 'pending'
    assert verdict.subject == 'nonmirror'


def test_combine():
    """Tests that violations beat obligations."""
    assert combine('1', [], []).status == 'holds'
    assert combine('1', [], ['a', 'b', 'c', 'd']).detail == 'a; b; c (+1 more)'
    assert combine('1', ['x'], ['a']).status == 'violated'
    with pytest.raises(ValueError):
        Verdict('1', 'maybe')


def test_report_text():
    """Tests report text, its parser and report comparison."""
    verdicts = [Verdict('1', 'holds'), Verdict('3', 'pending', 'i=4', 'no witness'),
                Verdict('3', 'holds', 'i=0', 'j=0 B-row 1 col=0')]
    report = RefereeReport('g2', stage=40, verdicts=verdicts, check='both')
    assert report.lines()[2] == 'COND g2 3 HOLDS i=0 j=0 B-row 1 col=0'
    assert report.status('3') == 'pending'
    assert report.status('3', 'i=0') == 'holds'
    assert report.ok
    parsed = parse_report(report.text().splitlines())
    assert report.text().splitlines()[0] == '# referee incremental | mode symbolic | stage 40 | check both'
    assert (parsed.game, parsed.stage, parsed.referee) == ('g2', 40, 'incremental')
    assert (parsed.mode, parsed.check) == ('symbolic', 'both')
    assert reports_agree(report, parsed)
    parsed.verdicts[1] = Verdict('3', 'violated', 'i=4')
    assert not parsed.ok
    assert report_differences(report, parsed) == [('3', 'i=4', 'pending'), ('3', 'i=4', 'violated')]
