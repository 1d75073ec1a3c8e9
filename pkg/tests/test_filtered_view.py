"""
--- Friedberg ---
Tests Bob's filtered view of the A-table.
"""
from friedberg import FiniteTable, FiniteFun
from friedberg.strategies import HeldCells, filtered_view


def test_odd_row_is_held():
    """Tests that the single cell of an odd row is hidden."""
    A = FiniteTable('A', cells=[(0, 0, 7)])
    held = HeldCells()
    assert held.update(A) == [0]
    assert held[0] == (0, 7)
    assert held.view.row(0) == FiniteFun()
    assert filtered_view(A, held).row(0) == FiniteFun()


def test_even_row_is_visible():
    """Tests that nothing is held for an even row."""
    A = FiniteTable('A', cells=[(0, 0, 7), (0, 1, 2)])
    held = HeldCells()
    held.update(A)
    assert 0 not in held
    assert held.view.row(0) == FiniteFun({0: 7, 1: 2})


def test_hold_release_sequence():
    """Tests holding and releasing while a row grows one cell at a time."""
    A = FiniteTable('A')
    held = HeldCells()
    A.set_cell(0, 0, 1)
    held.update(A)
    assert held[0] == (0, 1)
    A.set_cell(0, 1, 2)
    held.update(A)
    assert held[0] is None
    assert held.view.row(0) == FiniteFun({0: 1, 1: 2})
    A.set_cell(0, 2, 3)
    held.update(A)
    assert held[0] == (2, 3)
    assert held.view.row(0) == FiniteFun({0: 1, 1: 2})
    assert held.check(A) == []


def test_unchanged_rows_are_skipped():
    """Tests that update only reports rows whose size changed."""
    A = FiniteTable('A', cells=[(0, 0, 1), (3, 0, 1), (3, 1, 1)])
    held = HeldCells()
    assert held.update(A) == [0, 3]
    assert held.update(A) == []
    A.set_cell(3, 5, 0)
    assert held.update(A) == [3]


def test_view_rows_have_even_support():
    """Tests the parity of every view row after random-looking growth."""
    A = FiniteTable('A')
    held = HeldCells()
    writes = [(0, 3, 1), (1, 0, 0), (0, 1, 4), (2, 2, 2), (0, 0, 9), (1, 4, 4), (2, 0, 1), (2, 5, 0)]
    for row, col, val in writes:
        A.set_cell(row, col, val)
        held.update(A)
        assert held.check(A) == []
        assert all(len(cells) % 2 == 0 for cells in held.view.rows.values())
        assert held.view == filtered_view(A, held)


def test_held_cell_check_reports_problems():
    """Tests that a stale held cell is reported."""
    A = FiniteTable('A', cells=[(0, 0, 7)])
    held = HeldCells()
    held.update(A)
    held.held[0] = (0, 8)
    assert len(held.check(A)) == 1
