"""
--- Friedberg ---
Bob's winning strategies for the games g0, g1, g2, g3, g4, ext and pp65.
"""
import logging
from friedberg.exceptions import BadParameters
from friedberg.tables import direct_sum_locate, unpair
from friedberg.protocol.moves import BobMove, GameKind
from friedberg.referee.provenance import EnumeratorCursor
from .assistants import AssistantState, g1_assistant_step, constant_assistant_step, odd_enumerator_step, pp65_copier_step
from .board import Board
from .enumeration import OddEnumeration
from .view import HeldCells


class Strategy:
    """
    Bob's strategy for g0: mirror assistants on the filtered view, odd-ification
    in place of invalidation and an exhaustion assistant for odd rows.

    """
    name = 'g0'
    filtered = True
    constant_rule = False
    require_odd = True

    def __init__(self, kind=None):
        """
        Create a strategy.

        Parameters
        ----------
        kind : GameKind or None
            Game kind with its parameters (defaults to the strategy's own game).

        """
        self.kind = GameKind(self.name) if kind is None else kind
        self.events = []
        self.boards = {}
        self.mains = {}
        self.constants = []
        self.enumerators = {}
        self.fired = {}
        self.fire_counts = {}
        self.held = HeldCells() if self.filtered else None
        self.enumeration = self.make_enumeration()
        self.stage = 0
        self.A, self.R = None, None
        self._invalid_counts = {}
        for table_id in self.kind.bob_tables(0):
            self.add_board(table_id)

    def __repr__(self):
        return "<%s %s | stage: %i | boards: %s>" % (type(self).__name__, self.name, self.stage,
                                                    ' '.join(self.boards))

    def make_enumeration(self):
        return OddEnumeration()

    def add_board(self, table_id):
        self.boards[table_id] = Board(table_id, require_odd=self.require_odd, events=self.events)
        self.mains[table_id] = []
        if self.enumeration is not None:
            self.enumerators[table_id] = AssistantState('odd_enumerator', active_since=self.stage, table=table_id)

    @property
    def view(self):
        return self.held.view if self.filtered else self.A

    def step(self, state):
        """
        Bob's reply to the accumulated state of the current stage.

        Parameters
        ----------
        state : GameState
            Game state after Alice's move.

        Returns
        -------
        BobMove
            Writes of every assistant, attributed to its actor.

        """
        self.stage = state.stage
        self.A, self.R = state.A, state.R
        if self.filtered:
            self.held.update(self.A)
        for table_id in self.kind.bob_tables(self.stage):
            if table_id not in self.boards:
                self.add_board(table_id)
        for board in self.boards.values():
            board.stage = self.stage
        self.run_mains()
        self.run_additional()
        return self.collect()

    def run_mains(self):
        view = self.view
        for table_id, board in self.boards.items():
            mains = self.mains[table_id]
            while len(mains) <= self.stage:
                mains.append(AssistantState('mirror', len(mains), active_since=self.stage, table=table_id))
            for assistant in mains:
                g1_assistant_step(assistant, board, view, self.invalidate, self.constant_rule, self.before_check)

    def run_additional(self):
        for table_id, assistant in self.enumerators.items():
            odd_enumerator_step(assistant, self.boards[table_id], self.enumeration, self.enumeration_kind)

    enumeration_kind = 'odd'

    def invalidate(self, assistant, board):
        board.oddify(assistant, assistant.label)

    before_check = None

    def fire(self, label, board, row):
        """Record a one-shot instruction."""
        self.fire_counts[label] = self.fire_counts.get(label, 0) + 1
        self.fired[label] = self.stage
        board.log(label, 'fire', row)
        logging.debug('Stage %i: instruction %s fired on %s-row %i' % (self.stage, label, board.table_id, row))

    def collect(self):
        move = BobMove()
        for table_id, board in self.boards.items():
            writes, k_delta = board.flush()
            for write in writes:
                move.add(table_id, *write)
            move.k_delta += k_delta
        return move

    def provenance(self):
        """Provenance of every used row of every board."""
        records = []
        for board in self.boards.values():
            records += board.provenance(self.held)
        return records

    def cursors(self):
        """
        Enumerator cursors and open mirror obligations per board.

        Every board records the number of mirror assistants started ('mains')
        and each started one holding no row at the end of the run ('await').

        """
        cursors = [EnumeratorCursor(t, self.enumeration_kind, a.cursor) for t, a in self.enumerators.items()]
        for table_id, mains in self.mains.items():
            cursors.append(EnumeratorCursor(table_id, 'mains', len(mains)))
            cursors += [EnumeratorCursor(table_id, 'await', a.index) for a in mains if table_id not in a.reserved]
        return cursors

    def check_invariants(self):
        """
        Problems with the strategy's invariants at the current stage (empty list when sound).

        """
        problems = []
        for board in self.boards.values():
            problems += board.check()
        if self.filtered and self.A is not None:
            problems += self.held.check(self.A)
        assistants = [a for mains in self.mains.values() for a in mains] + self.constants
        for assistant in assistants:
            key = (assistant.table, assistant.role, assistant.index)
            if assistant.invalid_count < self._invalid_counts.get(key, 0):
                problems.append('%s invalidation count decreased' % assistant.label)
            self._invalid_counts[key] = assistant.invalid_count
        problems += ['Instruction %s fired %i times' % kv for kv in self.fire_counts.items() if kv[1] > 1]
        return problems

    def mirror_rows(self):
        """Current mirror reservations as {(table, A-row): row}."""
        return {(t, a.index): a.reserved[t] for t, mains in self.mains.items() for a in mains if t in a.reserved}


class InvalidationStrategy(Strategy):
    """
    Bob's strategy for g1: mirror assistants that invalidate rows into K.

    """
    name = 'g1'
    filtered = False

    def make_enumeration(self):
        return None

    def invalidate(self, assistant, board):
        board.invalidate(assistant, assistant.label)


class DiagonalStrategy(Strategy):
    """
    Bob's strategy for g2: the g0 strategy plus the diagonal instruction of
    every mirror assistant i, which odd-ifies the A(i,i)-th row once it is hers.

    """
    name = 'g2'

    def before_check(self, assistant, board):
        i = assistant.index
        label = 'diag:%i' % i
        if label in self.fired:
            return False
        target = self.A.get(i, i)
        if target is None or assistant.reserved.get(board.table_id) != target:
            return False
        board.oddify(assistant, label)
        assistant.invalid_count += 1
        self.fire(label, board, target)
        board.reserve_fresh_row(assistant)
        return True


class SymmetricStrategy(Strategy):
    """
    Bob's strategy for g3: two g0 copies on B and C whose mirror assistants also
    odd-ify rows with a constant visible prefix, constant assistants serving both
    tables, and cross instructions reading R.

    """
    name = 'g3'
    constant_rule = True

    def run_additional(self):
        while len(self.constants) <= self.stage:
            self.constants.append(AssistantState('constant', len(self.constants), active_since=self.stage))
        boards = list(self.boards.values())
        for assistant in self.constants:
            constant_assistant_step(assistant, boards, self.cross)
        Strategy.run_additional(self)

    def cross_target(self, assistant):
        """
        Table and row the cross instruction of a constant assistant points at.

        Returns
        -------
        tuple or None
            (table id, row) when R announces a target, None otherwise.

        """
        m = assistant.index
        source, target = ('C', 'B') if m % 2 == 0 else ('B', 'C')
        value = self.R.get(m // 2, assistant.reserved[source])
        return None if value is None else (target, value)

    def cross(self, assistant):
        label = 'cross:%i' % assistant.index
        if label in self.fired:
            return
        target = self.cross_target(assistant)
        if target is None:
            return
        table_id, row = target
        board = self.boards.get(table_id)
        if board is None or assistant.reserved.get(table_id) != row:
            return
        board.oddify(assistant, label)
        assistant.invalid_count += 1
        self.fire(label, board, row)
        board.reserve_fresh_row(assistant)

    def cursors(self):
        cursors = Strategy.cursors(self)
        return cursors + [EnumeratorCursor(t, 'const', len(self.constants)) for t in self.boards]


class IndependentStrategy(SymmetricStrategy):
    """
    Bob's strategy for g4: one copy per table B^k (starting at stage k), constant
    assistants serving every table, and cross instructions into the direct sum
    of the other tables.

    """
    name = 'g4'

    def cross_target(self, assistant):
        i, k = unpair(assistant.index)
        source = 'B%i' % k
        if source not in assistant.reserved:
            return None
        value = self.R.get(i, assistant.reserved[source])
        if value is None:
            return None
        summand, row = direct_sum_locate(value, excluded=k)
        return 'B%i' % summand, row


class ExtensionStrategy(Strategy):
    """
    Bob's strategy for the extension game: no filtered view, B-ification in place
    of odd-ification and an exhaustion assistant for the members of beta.

    """
    name = 'ext'
    filtered = False
    require_odd = False
    enumeration_kind = 'beta'

    def make_enumeration(self):
        return self.kind.beta

    def invalidate(self, assistant, board):
        board.bify(assistant, assistant.label, self.kind.beta)


class FillStrategy(Strategy):
    """
    Bob's strategy for the fill game: odd-making cells carry f(j) at column j and
    a copier releases fresh copies of odd A-rows.

    """
    name = 'pp65'

    def __init__(self, kind=None):
        Strategy.__init__(self, kind)
        self.copier = AssistantState('pp65_copier')

    def make_enumeration(self):
        return None

    def invalidate(self, assistant, board):
        board.oddify(assistant, assistant.label, fill=self.kind.fill)

    def run_additional(self):
        pp65_copier_step(self.copier, self.boards['B'], self.A)


STRATEGIES = {s.name: s for s in (Strategy, InvalidationStrategy, DiagonalStrategy, SymmetricStrategy,
                                   IndependentStrategy, ExtensionStrategy, FillStrategy)}


def make_strategy(kind, bob=None):
    """
    Bob's strategy for a game kind.

    Parameters
    ----------
    kind : GameKind or str
        Game kind.
    bob : str or None
        Strategy id; only the game's own winning strategy (its game name) is available.

    """
    if not isinstance(kind, GameKind):
        kind = GameKind(kind)
    bob = kind.name if bob is None else bob
    if bob != kind.name:
        raise BadParameters('Strategy %s cannot play %s' % (bob, kind.name))
    return STRATEGIES[kind.name](kind)
