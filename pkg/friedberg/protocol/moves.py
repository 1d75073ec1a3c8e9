"""
--- Friedberg ---
Game kinds, moves, game state and the collateral-duty enforcing submit operations.
"""
import logging
from friedberg.exceptions import BadParameters, OutOfTurn, ShapeMismatch, ConflictingWrite
from friedberg.tables import FiniteTable, InvalidationSet


KINDS = ('g0', 'g1', 'g2', 'g3', 'g4', 'ext', 'pp65')

CONDITIONS = {'g0': ['every A-row appears in B',
                     'B-rows are pairwise distinct'],
              'g1': ['every A-row appears in B outside K',
                     'B-rows outside K are pairwise distinct'],
              'g2': ['every A-row appears in B',
                     'B-rows are pairwise distinct',
                     'if A(i,.) is total then B(A(i,j),.) != A(j,.) for some j'],
              'g3': ['every A-row appears in B',
                     'every A-row appears in C',
                     'B-rows are pairwise distinct',
                     'C-rows are pairwise distinct',
                     'if R(i,.) is total then B(R(i,j),.) != C(j,.) for some j',
                     'if R(i,.) is total then C(R(i,j),.) != B(j,.) for some j'],
              'g4': ['every A-row appears in every B^k',
                     'rows of every B^k are pairwise distinct',
                     'if R(i,.) is total then (+)_{l!=k} B^l(R(i,j),.) != B^k(j,.) for some j'],
              'ext': ['every A-row and every beta-member appears in B',
                      'B-rows are pairwise distinct'],
              'pp65': ['every A-row appears in B',
                       'B-rows are pairwise distinct',
                       'every row outside the A-mirrors has finite domain',
                       'every row g outside the A-mirrors has g <= f u h for some A-row h']}

PARAMETERS = {'g0': (), 'g1': (), 'g2': (), 'g3': (), 'g4': ('tables',), 'ext': ('beta',), 'pp65': ('fill',)}

REQUIRED = {'ext': ('beta',), 'pp65': ('fill',)}


class GameKind:
    """
    One of the games g0, g1, g2, g3, g4, ext, pp65 with its parameters.

    """
    def __init__(self, name, beta=None, fill=None, tables=None):
        """
        Create a game kind.

        Parameters
        ----------
        name : str
            Game name (g0 | g1 | g2 | g3 | g4 | ext | pp65).
        beta : enumeration or None
            Injective enumeration of the class B (ext only).
        fill : FillFunction or None
            Function f with infinite domain used for odd-making cells (pp65 only).
        tables : int or None
            Cap on the number of B tables (g4 only, uncapped by default).

        """
        name = str(name).lower()
        if name not in KINDS:
            raise BadParameters('Unknown game kind: %s' % name)
        given = {'beta': beta, 'fill': fill, 'tables': tables}
        for key, value in given.items():
            if value is not None and key not in PARAMETERS[name]:
                raise BadParameters('Game %s takes no %s parameter' % (name, key))
        for key in REQUIRED.get(name, ()):
            if given[key] is None:
                raise BadParameters('Game %s requires a %s parameter' % (name, key))
        if beta is not None and beta.is_empty():
            raise BadParameters('The beta numbering is empty')
        if tables is not None and tables < 1:
            raise BadParameters('g4 needs at least one table')
        self.name, self.beta, self.fill, self.tables = name, beta, fill, tables

    def __repr__(self):
        params = ' '.join('%s=%s' % kv for kv in self.params().items())
        return "<GameKind %s%s>" % (self.name, ' ' + params if params else '')

    def __eq__(self, other):
        return isinstance(other, GameKind) and self.name == other.name and self.params() == other.params()

    @property
    def has_r(self):
        """Alice also announces R (games g3 and g4)."""
        return self.name in ('g3', 'g4')

    @property
    def has_k(self):
        return self.name == 'g1'

    @property
    def conditions(self):
        return CONDITIONS[self.name]

    def bob_tables(self, stage):
        """
        Table ids Bob announces at a stage.

        """
        if self.name == 'g3':
            return ['B', 'C']
        if self.name == 'g4':
            n_tables = stage + 1 if self.tables is None else min(stage + 1, self.tables)
            return ['B%i' % k for k in range(n_tables)]
        return ['B']

    def params(self):
        """Parameters as canonical text (used in trace headers)."""
        params = {}
        if self.beta is not None:
            params['beta'] = self.beta.spec()
        if self.fill is not None:
            params['fill'] = self.fill.spec()
        if self.tables is not None:
            params['tables'] = str(self.tables)
        return params


class AliceMove:
    """
    Alice's announcement at one stage: new cells of A and (g3, g4) of R.

    """
    def __init__(self, a_delta=(), r_delta=()):
        self.a_delta = [tuple(w) for w in a_delta]
        self.r_delta = [tuple(w) for w in r_delta]

    def __repr__(self):
        return "<AliceMove A: %i | R: %i>" % (len(self.a_delta), len(self.r_delta))

    def __len__(self):
        return len(self.a_delta) + len(self.r_delta)

    def __eq__(self, other):
        return isinstance(other, AliceMove) and (self.a_delta, self.r_delta) == (other.a_delta, other.r_delta)

    def deltas(self):
        return {'A': self.a_delta, 'R': self.r_delta}


class BobMove:
    """
    Bob's announcement at one stage.

    Writes are (row, col, val, actor) tuples per table id; the actor label
    attributes every write to one assistant action or instruction.

    """
    def __init__(self, deltas=None, k_delta=(), k_retract=()):
        self.deltas = {} if deltas is None else {t: [tuple(w) for w in ws] for t, ws in deltas.items()}
        self.k_delta = list(k_delta)
        self.k_retract = list(k_retract)

    def __repr__(self):
        return "<BobMove tables: %s | writes: %i | K: %i>" % (sorted(self.deltas), len(self), len(self.k_delta))

    def __len__(self):
        return sum(len(w) for w in self.deltas.values())

    def __eq__(self, other):
        return isinstance(other, BobMove) and (self.deltas, self.k_delta) == (other.deltas, other.k_delta)

    def add(self, table, row, col, val, actor=''):
        self.deltas.setdefault(table, []).append((row, col, val, actor))


class GameState:
    """
    Accumulated tables of a game run plus the stage counter and turn.

    """
    def __init__(self, kind, seed=0):
        self.kind = kind
        self.seed = seed
        self.stage = 0
        self.turn = 'alice'
        self.tables = {'A': FiniteTable('A')}
        if kind.has_r:
            self.tables['R'] = FiniteTable('R')
        if kind.name == 'g3':
            self.tables['B'], self.tables['C'] = FiniteTable('B'), FiniteTable('C')
        elif kind.name != 'g4':
            self.tables['B'] = FiniteTable('B')
        self.K = InvalidationSet() if kind.has_k else None

    def __repr__(self):
        return "<GameState %s | stage: %i | turn: %s | tables: %s>" % (self.kind.name, self.stage, self.turn,
                                                                     ' '.join(sorted(self.tables)))

    @property
    def A(self):
        return self.tables['A']

    @property
    def R(self):
        return self.tables.get('R')

    def bob_table_ids(self):
        """Ids of Bob's tables announced so far, in announcement order."""
        if self.kind.name == 'g4':
            return sorted((t for t in self.tables if t.startswith('B')), key=lambda t: int(t[1:]))
        return [t for t in ('B', 'C') if t in self.tables]

    def digest(self):
        """Combined digest of all accumulated tables (and K)."""
        parts = [self.tables[t].digest() for t in sorted(self.tables)]
        if self.K is not None:
            parts.append('K' + ','.join(str(r) for r in self.K))
        return '|'.join(parts)


def new_game(kind, seed=0):
    """
    Start a game: empty tables, stage 0, Alice to move.

    """
    if not isinstance(kind, GameKind):
        kind = GameKind(kind)
    return GameState(kind, seed=seed)


def _apply_atomically(tables, deltas):
    """
    Validate every write of a move against the tables and the move itself, then apply.

    """
    pending = {}
    for table_id, writes in deltas.items():
        table = tables[table_id]
        for write in writes:
            row, col, val = write[:3]
            if min(row, col, val) < 0:
                raise ShapeMismatch('Negative entry in write %s%s' % (table_id, (row, col, val)))
            table.check_cell(row, col, val)
            old = pending.get((table_id, row, col))
            if old is not None and old != val:
                raise ConflictingWrite(table_id, row, col, old, val)
            pending[(table_id, row, col)] = val
    for (table_id, row, col), val in pending.items():
        tables[table_id].set_cell(row, col, val)


def submit_alice(state, move):
    """
    Apply Alice's move (duty A_s <= A_{s+1}, R_s <= R_{s+1}).

    Raises
    ------
    OutOfTurn, ShapeMismatch, ConflictingWrite

    """
    if state.turn != 'alice':
        raise OutOfTurn('Alice moved twice at stage %i' % state.stage)
    if move.r_delta and not state.kind.has_r:
        raise ShapeMismatch('Game %s has no R table' % state.kind.name)
    deltas = {'A': move.a_delta}
    if state.kind.has_r:
        deltas['R'] = move.r_delta
    _apply_atomically(state.tables, deltas)
    state.turn = 'bob'
    return state


def submit_bob(state, move):
    """
    Apply Bob's move and advance the stage (duties B_s <= B_{s+1}, K_s <= K_{s+1}).

    Raises
    ------
    OutOfTurn, ShapeMismatch, ConflictingWrite

    """
    if state.turn != 'bob':
        raise OutOfTurn('Bob moved before Alice at stage %i' % state.stage)
    allowed = state.kind.bob_tables(state.stage)
    for table_id in move.deltas:
        if table_id not in allowed:
            raise ShapeMismatch('Table %s is not announced at stage %i of %s' % (table_id, state.stage,
                                                                              state.kind.name))
    if move.k_retract:
        raise ShapeMismatch('Invalid rows cannot become valid again: %s' % move.k_retract)
    if move.k_delta and not state.kind.has_k:
        raise ShapeMismatch('Game %s has no invalidation set' % state.kind.name)
    for table_id in allowed:
        if table_id not in state.tables:
            state.tables[table_id] = FiniteTable(table_id)
    _apply_atomically(state.tables, move.deltas)
    for row in move.k_delta:
        state.K.add(row)
    logging.debug('Stage %i: Bob wrote %i cells' % (state.stage, len(move)))
    state.stage += 1
    state.turn = 'alice'
    return state
