"""
--- Friedberg ---
Record, replay and store game runs.
"""
import io
import os
import hashlib
from friedberg.adversaries.limits import DeclaredLimits
from friedberg.strategies.strategy import make_strategy
from .moves import GameKind, new_game, submit_alice, submit_bob
from .read import read_trace
from .write import write_trace


def state_digest(state):
    """sha256 over the canonical cells of every accumulated table."""
    return hashlib.sha256(state.digest().encode()).hexdigest()


class Transcript:
    """
    Stage records of one game run plus its end-of-run records.

    """
    def __init__(self, kind=None, seed=0, stages=0, adversary='', read=None):
        """
        Create a transcript.

        Parameters
        ----------
        kind : GameKind or str or None
            Game kind (g0 when None).
        seed : int
            Run seed.
        stages : int
            Stage bound of the run.
        adversary : str
            Spec of Alice's adversary (recorded in the header only).
        read : str or None
            Trace file name to read the transcript from.

        """
        self.name = 'Transcript'
        if kind is not None and not isinstance(kind, GameKind):
            kind = GameKind(kind)
        self.kind = GameKind('g0') if kind is None else kind
        self.seed, self.stages, self.adversary = seed, stages, adversary
        self.records = []
        self.limits = {'A': DeclaredLimits()}
        self.provenance, self.cursors = [], []
        self.fired, self.events, self.problems = {}, [], []
        self.digest = None
        self.state = new_game(self.kind, seed)
        self.current_stage = 0
        if read is not None:
            self.read(read)

    def __repr__(self):
        return "<Transcript %s | seed: %i | stages: %i/%i | provenance rows: %i>" % (
            self.kind.name, self.seed, len(self.records), self.stages, len(self.provenance))

    def __len__(self):
        """
        Returns number of recorded stages.

        """
        return len(self.records)

    def __getitem__(self, i):
        """
        Indexing method. Returns the (stage, AliceMove, BobMove) record of a stage.

        """
        return self.records[i]

    def __iter__(self):
        self.current_stage = 0
        return self

    def __next__(self):
        if self.current_stage >= len(self):
            raise StopIteration
        record = self[self.current_stage]
        self.current_stage += 1
        return record

    def record(self, stage, alice_move, bob_move):
        self.records.append((stage, alice_move, bob_move))

    def finish(self, state, strategy=None, adversary=None):
        """
        Attach the end-of-run records of a finished run.

        Parameters
        ----------
        state : GameState
            Final game state.
        strategy : Strategy or None
            Bob's strategy (provides provenance, cursors, fired instructions and events).
        adversary : Adversary or None
            Alice's adversary (provides declared limits).

        """
        self.state = state
        if strategy is not None:
            self.provenance = strategy.provenance()
            self.cursors = strategy.cursors()
            self.fired = dict(strategy.fired)
            self.events = strategy.events
        if adversary is not None:
            self.adversary = adversary.spec()
            self.limits = {'A': adversary.declared_limits('A')}
            if self.kind.has_r:
                self.limits['R'] = adversary.declared_limits('R')
        self.digest = state_digest(state)

    def replay(self):
        """
        Re-apply every recorded move through the duty-enforcing submit operations.

        Returns
        -------
        GameState
            Accumulated state after the last recorded stage.

        Raises
        ------
        ConflictingWrite, OutOfTurn, ShapeMismatch
            When a recorded move violates a duty.

        """
        state = new_game(self.kind, self.seed)
        for _, alice_move, bob_move in self.records:
            submit_alice(state, alice_move)
            submit_bob(state, bob_move)
        return state

    def replay_matches(self):
        """True iff the replayed tables reproduce the recorded digest."""
        if self.digest is None:
            return not self.records
        return state_digest(self.replay()) == self.digest

    def rederive(self):
        """
        Re-run Bob's strategy against the recorded Alice moves.

        The strategy must reproduce every recorded Bob move and, at the end of
        the run, the recorded provenance, cursors and fired instructions.

        Returns
        -------
        list
            Differences found, empty when the trace is the strategy's own.

        Raises
        ------
        ConflictingWrite, OutOfTurn, ShapeMismatch, StrategyError
            When the recorded Alice moves cannot be replayed against the strategy.

        """
        if not self.records:
            return []
        strategy = make_strategy(self.kind)
        state = new_game(self.kind, self.seed)
        for stage, alice_move, bob_move in self.records:
            submit_alice(state, alice_move)
            move = strategy.step(state)
            if move != bob_move:
                return ['Stage %i: recorded Bob move is not the strategy\'s reply' % stage]
            submit_bob(state, move)
        differences = []
        if sorted(p.canonical() for p in strategy.provenance()) != sorted(p.canonical() for p in self.provenance):
            differences.append('provenance records differ from the strategy\'s')
        if sorted(c.canonical() for c in strategy.cursors()) != sorted(c.canonical() for c in self.cursors):
            differences.append('enumerator cursors differ from the strategy\'s')
        if dict(strategy.fired) != self.fired:
            differences.append('fired instructions differ from the strategy\'s')
        return differences

    def read(self, filename):
        """
        Read trace file and replay it.

        Parameters
        ----------
        filename : str
            Trace file name.

        Returns
        -------
        None
            Assigns the transcript attributes; an empty file reads as an empty g0 run.

        """
        self.name = os.path.splitext(os.path.basename(filename))[0]
        trace = read_trace(filename)
        if trace['kind'] is not None:
            self.kind = trace['kind']
        self.seed, self.stages, self.adversary = trace['seed'], trace['stages'], trace['adversary']
        self.records = trace['records']
        self.limits = trace['limits']
        if not self.kind.has_r:
            self.limits.pop('R', None)
        self.provenance, self.cursors = trace['provenance'], trace['cursors']
        self.fired, self.digest = trace['fired'], trace['digest']
        self.state = self.replay()

    def write(self, filename):
        """
        Write the transcript as a trace file.

        """
        with open(filename, 'w') as trace_file:
            write_trace(trace_file, self)

    def text(self):
        """Trace text of the transcript."""
        buffer = io.StringIO()
        write_trace(buffer, self)
        return buffer.getvalue()
