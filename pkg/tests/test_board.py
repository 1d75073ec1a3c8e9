"""
--- Friedberg ---
Tests Bob's output boards: fresh rows, odd-ification and the odd registry.
"""
from friedberg import FiniteFun
from friedberg.strategies import Board, OddRegistry, AssistantState, FillFunction, OddEnumeration
from friedberg.exceptions import StrategyError
import pytest


def mirror(i):
    return AssistantState('mirror', i, table='B')


def test_reserve_fresh_row():
    """Tests that fresh rows are the least rows never used."""
    board = Board('B')
    first, second, third = mirror(0), mirror(1), mirror(2)
    assert board.reserve_fresh_row(first) == 0
    assert board.reserve_fresh_row(second) == 1
    assert board.reserve_fresh_row(third) == 2
    board.oddify(third, third.label)
    assert board.reserve_fresh_row(mirror(3)) == 3
    assert first.reserved['B'] != second.reserved['B']
    assert board.check() == []


def test_oddify_even_row():
    """Tests that one cell is added to an even row at the watermark."""
    board = Board('B')
    assistant = mirror(0)
    row = board.reserve_fresh_row(assistant)
    board.write(row, 0, 5, 'main:0')
    board.write(row, 1, 5, 'main:0')
    board.registry.bump(9)
    board.oddify(assistant, assistant.label)
    assert board.table.row(row) == FiniteFun({0: 5, 1: 5, 10: 0})
    assert FiniteFun({0: 5, 1: 5, 10: 0}) in board.registry
    assert board.registry.col_watermark == 11
    assert 'B' not in assistant.reserved
    assert board.final[row].kind == 'odd'


def test_oddify_empty_row():
    """Tests odd-ification of an empty reserved row."""
    board = Board('B')
    board.registry.bump(3)
    assistant = mirror(0)
    row = board.reserve_fresh_row(assistant)
    board.oddify(assistant, assistant.label)
    assert board.table.row(row) == FiniteFun({4: 0})


def test_oddify_odd_row_adds_two_cells():
    """Tests that an odd row receives two cells and stays odd."""
    board = Board('B')
    assistant = mirror(0)
    row = board.reserve_fresh_row(assistant)
    board.write(row, 0, 1, 'main:0')
    board.oddify(assistant, assistant.label)
    assert board.table.row(row) == FiniteFun({0: 1, 1: 0, 2: 0})
    assert board.table.row(row).is_odd()


def test_consecutive_oddifications_differ():
    """Tests that every odd-ification registers a new function."""
    board = Board('B')
    rows = []
    for i in range(5):
        assistant = mirror(i)
        board.reserve_fresh_row(assistant)
        rows.append(board.oddify(assistant, assistant.label))
    functions = [board.table.row(row) for row in rows]
    assert len(set(functions)) == 5
    assert all(f.is_odd() for f in functions)
    assert len(board.registry) == 5


def test_oddify_with_fill_function():
    """Tests that odd-making cells carry f(j) at column j."""
    board = Board('B')
    board.registry.bump(8)
    assistant = mirror(0)
    row = board.reserve_fresh_row(assistant)
    board.oddify(assistant, assistant.label, fill=FillFunction())
    assert board.table.get(row, 9) == 9
    board.registry.bump(20)
    assistant = mirror(1)
    row = board.reserve_fresh_row(assistant)
    board.oddify(assistant, assistant.label, fill=FillFunction(2, 1, 3, 1))
    assert board.table.row(row) == FiniteFun({22: 45})


def test_bify_extends_to_unused_member():
    """Tests B-ification towards the least unused odd function."""
    board = Board('B', require_odd=False)
    assistant = mirror(0)
    row = board.reserve_fresh_row(assistant)
    board.write(row, 0, 5, 'main:0')
    board.bify(assistant, assistant.label, OddEnumeration())
    assert board.table.row(row) == FiniteFun({0: 5})
    assert board.final[row].kind == 'beta'


def test_registry_refuses_duplicates():
    """Tests that a function cannot be committed twice."""
    registry = OddRegistry()
    registry.commit(FiniteFun({0: 0}), 0)
    with pytest.raises(StrategyError):
        registry.commit(FiniteFun({0: 0}), 1)
    with pytest.raises(StrategyError):
        registry.commit(FiniteFun({0: 0, 1: 0}), 2)
    assert registry.check() == []


def test_board_provenance():
    """Tests provenance records of reserved and frozen rows."""
    board = Board('B')
    keeper, loser = mirror(0), mirror(1)
    board.reserve_fresh_row(keeper)
    board.reserve_fresh_row(loser)
    board.oddify(loser, loser.label)
    constant = AssistantState('constant', 3)
    board.reserve_fresh_row(constant)
    kinds = [(p.row, p.kind, p.ref) for p in board.provenance()]
    assert kinds == [(0, 'mirror', 0), (1, 'odd', FiniteFun({0: 0})), (2, 'constant', 3)]
