"""
--- Friedberg ---
Alice players: scripted, program enumeration, seeded random and frozen adversaries.
"""
import logging
import numpy as np
from friedberg.exceptions import InconsistentScript
from friedberg.protocol.moves import AliceMove
from .limits import LimitDecl, DeclaredLimits


class Adversary:
    """
    Base Alice player: no moves, every row limits to the empty function.

    """
    kind = 'silent'

    def __repr__(self):
        return "<%s>" % type(self).__name__

    def next_move(self, stage, state):
        """
        Alice's move at a stage given the accumulated state.

        Parameters
        ----------
        stage : int
            Current stage.
        state : GameState
            Accumulated tables before Alice's move.

        Returns
        -------
        AliceMove
            New cells of A (and R).

        """
        return AliceMove()

    def declared_limits(self, table='A'):
        """Declared limits of the rows of A (or R)."""
        return DeclaredLimits(default=LimitDecl.finite())

    def declared_limit(self, row, table='A'):
        return self.declared_limits(table)[row]

    def spec(self):
        return self.kind


class ScriptedAdversary(Adversary):
    """
    Scheduled writes plus declared limits; rows with a total declaration are
    streamed so that at stage s columns 0..s are announced.

    """
    kind = 'scripted'

    def __init__(self, writes=(), limits=None, name='script'):
        """
        Create a scripted adversary.

        Parameters
        ----------
        writes : iterable
            (stage, table, row, col, val) scheduled writes, table in A | R.
        limits : dict or None
            {table: {row: LimitDecl}}; rows never mentioned are declared finite(empty).
        name : str
            Script name.

        Raises
        ------
        InconsistentScript
            If writes contradict each other or their declared limits.

        """
        self.name = name
        self.writes = sorted(tuple(w) for w in writes)
        self.limits = {'A': {}, 'R': {}}
        for table, rows in (limits or {}).items():
            self.limits[table] = dict(rows)
        self.schedule = {}
        content = {}
        for stage, table, row, col, val in self.writes:
            if table not in ('A', 'R'):
                raise InconsistentScript('Alice cannot write table %s' % table)
            old = content.get((table, row, col))
            if old is not None and old != val:
                logging.warning('Script %s writes %s(%i, %i) twice' % (name, table, row, col))
                raise InconsistentScript('%s(%i, %i) scripted as %i and %i' % (table, row, col, old, val))
            content[(table, row, col)] = val
            self.schedule.setdefault(stage, []).append((table, row, col, val))
        for (table, row, col), val in content.items():
            decl = self.limits[table].get(row, LimitDecl.finite())
            if not decl.consistent_with({col: val}):
                raise InconsistentScript('%s(%i, %i) = %i contradicts %s' % (table, row, col, val, decl.canonical()))
        for table, rows in self.limits.items():
            for row, decl in rows.items():
                if decl.kind == 'finite':
                    cells = {c: v for (t, r, c), v in content.items() if t == table and r == row}
                    if cells != decl.value.as_dict():
                        raise InconsistentScript('%s-row %i is declared %s but scripted as %s'
                                                 % (table, row, decl.canonical(), cells))
        self.streams = [(t, r, d) for t, rows in sorted(self.limits.items()) for r, d in sorted(rows.items())
                        if d.is_total]

    def __repr__(self):
        return "<ScriptedAdversary %s | writes: %i | streamed rows: %i>" % (self.name, len(self.writes),
                                                                          len(self.streams))

    def next_move(self, stage, state):
        writes = {'A': {}, 'R': {}}
        for table, row, col, val in self.schedule.get(stage, []):
            writes[table][(row, col)] = val
        for table, row, decl in self.streams:
            cells = state.tables[table].row_cells(row) if table in state.tables else {}
            for col in range(stage + 1):
                if col not in cells:
                    writes[table][(row, col)] = decl.value_at(col)
        return AliceMove(sorted((r, c, v) for (r, c), v in writes['A'].items()),
                         sorted((r, c, v) for (r, c), v in writes['R'].items()))

    def declared_limits(self, table='A'):
        return DeclaredLimits(self.limits[table], default=LimitDecl.finite())

    def spec(self):
        return 'scripted:%s' % self.name


class EnumerationAdversary(Adversary):
    """
    Alice enumerating the graphs of a pool of toy programs: at stage s, A(i, x)
    is announced for every input x < s on which program i halts within
    step_scale * s steps.

    """
    kind = 'enumeration'

    def __init__(self, programs, step_scale=1, name='pool'):
        self.programs = list(programs)
        self.step_scale = step_scale
        self.name = name
        self._runs = {}

    def __repr__(self):
        return "<EnumerationAdversary %s | programs: %i | step scale: %i>" % (self.name, len(self.programs),
                                                                            self.step_scale)

    def halted_cells(self, stage):
        """
        Cells (row, x, output) found by stage-bounded evaluation, stepping cached runs.

        """
        budget = self.step_scale * stage
        cells = []
        for row, program in enumerate(self.programs):
            for x in range(stage):
                run = self._runs.get((row, x))
                if run is None:
                    run = self._runs[(row, x)] = program.start(x)
                if run.advance(budget) and run.steps <= budget:
                    cells.append((row, x, run.output))
        return cells

    def next_move(self, stage, state):
        A = state.A
        return AliceMove([(r, c, v) for r, c, v in self.halted_cells(stage) if A.get(r, c) is None])

    def declared_limits(self, table='A'):
        declarations = {row: p.limit for row, p in enumerate(self.programs)}
        declarations = {row: (d if d is not None else LimitDecl.undeclared()) for row, d in declarations.items()}
        return DeclaredLimits(declarations, default=LimitDecl.finite())

    def spec(self):
        return 'enumeration:%s' % self.name


class RandomAdversary(Adversary):
    """
    Seeded random monotone Alice: a few random cells per stage, written only into
    empty cells (R as well in games with an R table).

    """
    kind = 'random'

    def __init__(self, seed=0, rows=8, cols=8, values=4, writes=2):
        self.seed, self.rows, self.cols, self.values, self.writes = seed, rows, cols, values, writes

    def __repr__(self):
        return "<RandomAdversary seed: %i | window: %ix%i | values: %i | writes: %i>" % (
            self.seed, self.rows, self.cols, self.values, self.writes)

    def next_move(self, stage, state):
        rng = np.random.RandomState([self.seed, stage])
        tables = ['A', 'R'] if state.kind.has_r else ['A']
        deltas = {}
        for table in tables:
            delta = {}
            draws = zip(rng.randint(self.rows, size=self.writes), rng.randint(self.cols, size=self.writes),
                        rng.randint(self.values, size=self.writes))
            for row, col, val in draws:
                row, col, val = int(row), int(col), int(val)
                if state.tables[table].get(row, col) is None and (row, col) not in delta:
                    delta[(row, col)] = val
            deltas[table] = sorted((r, c, v) for (r, c), v in delta.items())
        return AliceMove(deltas['A'], deltas.get('R', ()))

    def declared_limits(self, table='A'):
        return DeclaredLimits(default=LimitDecl.undeclared())

    def spec(self):
        return 'random:%i' % self.seed


class FrozenAdversary(Adversary):
    """
    Wrapper replaying a base adversary before the freeze stage and silent afterwards.

    """
    kind = 'frozen'

    def __init__(self, base, stage):
        self.base = base
        self.freeze = stage

    def __repr__(self):
        return "<FrozenAdversary %r at stage %i>" % (self.base, self.freeze)

    def next_move(self, stage, state):
        if stage >= self.freeze:
            return AliceMove()
        return self.base.next_move(stage, state)

    def declared_limits(self, table='A'):
        """Finite declarations of the base; total rows are cut by the freeze."""
        base = self.base.declared_limits(table)
        declarations = {r: d for r, d in base.declarations.items() if d.kind == 'finite'}
        declarations.update({r: LimitDecl.undeclared() for r, d in base.declarations.items() if d.kind != 'finite'})
        default = base.default if base.default.kind == 'finite' else LimitDecl.undeclared()
        return DeclaredLimits(declarations, default=default)

    def spec(self):
        return 'frozen:%i:%s' % (self.freeze, self.base.spec())


def next_alice_move(adversary, stage, history):
    """Alice's move at a stage (history is the accumulated GameState)."""
    return adversary.next_move(stage, history)


def declared_limit(adversary, row, table='A'):
    """Declared limit of one of Alice's rows."""
    return adversary.declared_limit(row, table)
