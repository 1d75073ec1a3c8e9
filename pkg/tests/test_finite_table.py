"""
--- Friedberg ---
Tests monotone table writes and row predicates.
"""
from friedberg import FiniteTable
from friedberg.tables import set_cell, is_odd_row, prefix_equal, prefix_constant, InvalidationSet
from friedberg.exceptions import ConflictingWrite
import numpy as np
import pytest


def test_set_cell_single_write():
    """Tests writing one cell into an empty table."""
    table = set_cell(FiniteTable('A'), 0, 0, 7)
    assert table.get(0, 0) == 7
    assert len(table) == 1
    assert list(table.cells()) == [(0, 0, 7)]


def test_set_cell_idempotent_rewrite():
    """Tests that rewriting the same value leaves the table unchanged."""
    table = FiniteTable('A', cells=[(0, 0, 7)])
    assert table.set_cell(0, 0, 7) is False
    assert len(table) == 1


def test_set_cell_conflicting_write():
    """Tests that changing a filled cell raises ConflictingWrite and keeps the old value."""
    table = FiniteTable('B', cells=[(0, 0, 7)])
    with pytest.raises(ConflictingWrite) as error:
        set_cell(table, 0, 0, 8)
    assert (error.value.table, error.value.old, error.value.new) == ('B', 7, 8)
    assert table.get(0, 0) == 7


def test_table_support_is_union_of_writes():
    """Tests that the final support is the union of all successful writes."""
    writes = [(2, 1, 4), (0, 3, 1), (2, 1, 4), (0, 0, 9), (5, 2, 2)]
    table = FiniteTable('A')
    for write in writes:
        table.set_cell(*write)
    assert set(table.cells()) == set(writes)
    assert table.row_ids() == [0, 2, 5]
    assert table.max_row() == 5 and table.max_col() == 3


def test_is_odd_row():
    """Tests the row parity predicate."""
    table = FiniteTable('A', cells=[(1, 3, 1), (2, 0, 4), (2, 1, 4)])
    assert not is_odd_row(table, 0)
    assert is_odd_row(table, 1)
    assert not is_odd_row(table, 2)


def test_prefix_equal():
    """Tests prefix comparison of rows."""
    table = FiniteTable('A', cells=[(0, 0, 5), (3, 2, 9), (4, 2, 9)])
    assert prefix_equal(table, 0, 0, 10)
    assert not prefix_equal(table, 0, 1, 1)
    assert prefix_equal(table, 3, 4, 2)
    assert prefix_equal(table, 3, 4, 3)
    assert prefix_equal(table, 3, 1, 2)
    assert not prefix_equal(table, 3, 1, 3)


def test_prefix_equal_is_monotone_in_k():
    """Tests that prefix equality at k + 1 implies prefix equality at k."""
    table = FiniteTable('A', cells=[(0, 0, 1), (0, 1, 2), (1, 0, 1), (1, 1, 3), (2, 0, 1), (2, 1, 2), (2, 4, 0)])
    for i in range(3):
        for j in range(3):
            for k in range(6):
                if prefix_equal(table, i, j, k + 1):
                    assert prefix_equal(table, i, j, k)


def test_prefix_constant():
    """Tests the constant-prefix predicate (vacuous for k = 0)."""
    table = FiniteTable('A', cells=[(0, 0, 3), (0, 1, 3), (0, 2, 4), (1, 1, 3)])
    assert prefix_constant(table, 5, 0)
    assert prefix_constant(table, 0, 2)
    assert not prefix_constant(table, 0, 3)
    assert not prefix_constant(table, 1, 2)


def test_dump_window():
    """Tests the dense window dump with -1 for empty cells."""
    table = FiniteTable('B', cells=[(0, 0, 7), (1, 2, 3), (9, 9, 9)])
    window = table.dump_window(3, 4)
    assert window.shape == (3, 4)
    assert window[0, 0] == 7 and window[1, 2] == 3
    assert np.sum(window >= 0) == 2


def test_table_digest_depends_on_cells():
    """Tests that equal tables share a digest and differing tables do not."""
    first = FiniteTable('B', cells=[(0, 0, 1), (1, 0, 2)])
    second = FiniteTable('B', cells=[(1, 0, 2), (0, 0, 1)])
    assert first == second
    assert first.digest() == second.digest()
    second.set_cell(1, 1, 0)
    assert first.digest() != second.digest()
    assert first.issubset(second) and not second.issubset(first)


def test_invalidation_set_is_monotone():
    """Tests adding rows to K."""
    K = InvalidationSet()
    assert K.add(5)
    assert not K.add(5)
    K.add(2)
    assert list(K) == [2, 5]
    assert InvalidationSet([5]).issubset(K)
