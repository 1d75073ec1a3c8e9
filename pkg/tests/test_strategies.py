"""
--- Friedberg ---
Tests Bob's composite strategies stage by stage.
"""
from friedberg import FiniteTable, FiniteFun, make_strategy, new_game, run_game
from friedberg.protocol import submit_alice, submit_bob, parse_kind
from friedberg.adversaries import Adversary, ScriptedAdversary, LimitDecl
from friedberg.strategies import AssistantState, DiagonalStrategy, IndependentStrategy
from friedberg.exceptions import BadParameters
import pytest


def play(strategy, adversary, stages):
    """Run a strategy by hand and return the final state."""
    state = new_game(strategy.kind)
    for stage in range(stages):
        submit_alice(state, adversary.next_move(stage, state))
        submit_bob(state, strategy.step(state))
    return state


def oddifications(strategy, actor, table='B'):
    return [e[0] for e in strategy.events if e[1] == actor and e[2] == 'oddify' and e[3] == table]


def twin_rows(value=5):
    """Alice with A-rows 0 and 1 both the total constant value."""
    return ScriptedAdversary(limits={'A': {0: LimitDecl.constant(value), 1: LimitDecl.constant(value)}})


def test_make_strategy():
    """Tests strategy lookup by game kind."""
    assert isinstance(make_strategy('g2'), DiagonalStrategy)
    assert isinstance(make_strategy('g4'), IndependentStrategy)
    with pytest.raises(BadParameters):
        make_strategy('g0', 'g1')


def test_g0_silent_three_stages():
    """Tests that with silent Alice assistant 0 keeps an empty row while the others odd-ify every stage."""
    strategy = make_strategy('g0')
    play(strategy, Adversary(), 3)
    assert strategy.mirror_rows() == {('B', 0): 0}
    assert oddifications(strategy, 'main:1') == [1, 2]
    assert oddifications(strategy, 'main:2') == [2]
    assert strategy.check_invariants() == []


def test_g0_silent_ten_stages():
    """Tests that the only mirror row of a silent run is the empty one."""
    transcript = run_game('g0', Adversary(), stages=10)
    kinds = [p.kind for p in transcript.provenance]
    assert kinds.count('mirror') == 1
    assert set(kinds) == {'mirror', 'odd'}
    mirror = [p for p in transcript.provenance if p.kind == 'mirror'][0]
    assert (mirror.row, mirror.ref) == (0, 0)
    assert transcript.state.tables['B'].row(0) == FiniteFun()


def test_g0_identical_rows_oddify_every_stage():
    """Tests that the assistant of a duplicate row never keeps a reservation."""
    strategy = make_strategy('g0')
    play(strategy, twin_rows(), 100)
    assert oddifications(strategy, 'main:1') == list(range(1, 100))
    assert ('B', 1) not in strategy.mirror_rows()


def test_g1_identical_rows_invalidate_every_stage():
    """Tests that the g1 assistant of a duplicate row invalidates every stage."""
    strategy = make_strategy('g1')
    state = play(strategy, twin_rows(), 50)
    stages = [e[0] for e in strategy.events if e[1] == 'main:1' and e[2] == 'invalidate']
    assert stages == list(range(1, 50))
    assert len(state.K) >= 49


def test_g0_frozen_even_row_converges():
    """Tests that assistant 0 ends up holding a copy of a frozen even row."""
    alice = ScriptedAdversary([(0, 'A', 0, 0, 5), (0, 'A', 0, 1, 5)], {'A': {0: LimitDecl.finite({0: 5, 1: 5})}})
    strategy = make_strategy('g0')
    state = play(strategy, alice, 20)
    row = strategy.mirror_rows()[('B', 0)]
    assert state.tables['B'].row(row) == FiniteFun({0: 5, 1: 5})


def test_g2_diagonal_instruction_fires_on_own_row():
    """Tests the diagonal instruction when the assistant reserves the A(i,i)-th row."""
    strategy = make_strategy('g2')
    board = strategy.boards['B']
    board.cursor = 5
    assistant = AssistantState('mirror', 2, table='B')
    board.reserve_fresh_row(assistant)
    strategy.A = FiniteTable('A', cells=[(2, 2, 5)])
    assert strategy.before_check(assistant, board)
    assert board.final[5].kind == 'odd'
    assert assistant.reserved['B'] == 6
    assert assistant.invalid_count == 1
    assert 'diag:2' in strategy.fired
    assert not strategy.before_check(assistant, board)


def test_g2_diagonal_instruction_other_row():
    """Tests that the diagonal instruction ignores rows the assistant does not reserve."""
    strategy = make_strategy('g2')
    board = strategy.boards['B']
    board.cursor = 9
    assistant = AssistantState('mirror', 2, table='B')
    board.reserve_fresh_row(assistant)
    strategy.A = FiniteTable('A', cells=[(2, 2, 5)])
    assert not strategy.before_check(assistant, board)
    assert strategy.fired == {}


def test_g3_constant_rows_are_odd_ified_by_mains():
    """Tests that mirror assistants of g3 odd-ify rows with a constant visible prefix."""
    alice = ScriptedAdversary(limits={'A': {1: LimitDecl.constant(3)}})
    g0, g3 = make_strategy('g0'), make_strategy('g3')
    play(g0, alice, 20)
    play(g3, alice, 20)
    assert oddifications(g0, 'main:1') == [1]
    assert oddifications(g3, 'main:1') == list(range(1, 20))
    assert oddifications(g3, 'main:1', 'C') == list(range(1, 20))


def test_g3_cross_instruction():
    """Tests that constant assistant 0 odd-ifies its B-row once R(0, c) points at it."""
    alice = ScriptedAdversary(limits={'R': {0: LimitDecl.constant(1)}})
    strategy = make_strategy('g3')
    play(strategy, alice, 10)
    assert strategy.fired == {'cross:0': 1}
    assert strategy.fire_counts == {'cross:0': 1}
    assert strategy.boards['B'].final[1].kind == 'odd'
    assert strategy.check_invariants() == []


def test_g4_tables_grow_one_per_stage():
    """Tests that exactly s + 1 tables receive writes at stage s."""
    transcript = run_game('g4', Adversary(), stages=6)
    for stage, _, bob_move in transcript:
        assert sorted(bob_move.deltas) == ['B%i' % k for k in range(stage + 1)]


def test_ext_matches_g0_on_even_rows():
    """Tests that with an odd class B the extension strategy keeps even rows like g0."""
    alice = ScriptedAdversary([(0, 'A', 0, 0, 1), (0, 'A', 0, 1, 2), (0, 'A', 1, 0, 2), (0, 'A', 1, 1, 2)],
                              {'A': {0: LimitDecl.finite({0: 1, 1: 2}), 1: LimitDecl.finite({0: 2, 1: 2})}})
    g0, ext = make_strategy('g0'), make_strategy(parse_kind('ext', {'beta': 'odd'}))
    play(g0, alice, 30)
    play(ext, alice, 30)
    assert g0.mirror_rows().keys() == ext.mirror_rows().keys()
    assert {('B', 0), ('B', 1)} <= set(g0.mirror_rows())


def test_pp65_oddify_uses_fill_values():
    """Tests that every odd-making cell of pp65 at column j holds f(j)."""
    transcript = run_game(parse_kind('pp65', {'fill': 'linear:2,1,1,0'}), Adversary(), stages=15)
    cells = [(c, v) for _, _, bob in transcript for r, c, v, actor in bob.deltas.get('B', ())
             if actor.endswith(':oddify')]
    assert cells
    assert all(v == 2 * c + 1 for c, v in cells)
