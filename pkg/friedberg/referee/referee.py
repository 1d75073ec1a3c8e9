"""
--- Friedberg ---
Incremental referee: per-stage invariant monitor and symbolic winner-condition verdicts.
"""
import logging
from friedberg.tables import pair, direct_sum_locate
from friedberg.protocol.moves import new_game, submit_alice, submit_bob
from friedberg.strategies.enumeration import OddEnumeration
from friedberg.strategies.view import HeldCells
from .conditions import (Slot, check_coverage, check_members_placed, check_injectivity, check_diag_g2,
                         check_nonreduction, check_faithfulness, check_finite_support, check_fill_cover, row_limit)
from .hypotheses import check_extension_hypothesis, class_a_members
from .provenance import known_limit, resolve_limit, awaiting_rows
from .report import RefereeReport, combine


MIRROR_SOURCES = ('mains', 'await')

READINGS = {'released': ('released',), 'nonmirror': ('odd', 'released')}


def alice_limits(transcript, table, window_rows):
    """Known limits of the first window_rows rows of one of Alice's tables."""
    declared = transcript.limits[table]
    concrete = transcript.state.tables[table]
    return {row: known_limit(declared[row], concrete.row_cells(row)) for row in range(window_rows)}


def is_filtered(kind):
    """Mirrors follow the filtered view in every game but g1 and ext."""
    return kind.name not in ('g1', 'ext')


def slots_of(transcript):
    """Exhaustion slots per table from the enumerator cursors of a transcript."""
    slots = {}
    for cursor in transcript.cursors:
        if cursor.source in MIRROR_SOURCES:
            continue
        if cursor.source == 'odd':
            slot = Slot('odd', cursor.index, OddEnumeration())
        elif cursor.source == 'beta':
            slot = Slot('beta', cursor.index, transcript.kind.beta)
        else:
            slot = Slot('const', cursor.index)
        slots.setdefault(cursor.table, []).append(slot)
    return slots


class Referee:
    """
    Referee watching a run stage by stage and deciding the winner conditions on its transcript.

    """
    def __init__(self, window=(64, 32), hypothesis=(3, 100)):
        """
        Create a referee.

        Parameters
        ----------
        window : tuple
            (rows, cols) window the limit conditions quantify over.
        hypothesis : tuple
            (N, M) of the extension-hypothesis proxy.

        """
        self.window = tuple(window)
        self.hypothesis = tuple(hypothesis)
        self.problems = []
        self.observed = 0
        self._sizes = {}
        self._k_size = 0
        self._held = None

    def __repr__(self):
        return "<Referee window: %ix%i | observed stages: %i | problems: %i>" % (self.window + (self.observed,
                                                                                         len(self.problems)))

    def problem(self, stage, message):
        self.problems.append('stage %i: %s' % (stage, message))
        logging.warning('Invariant problem at stage %i: %s' % (stage, message))

    def observe(self, state, strategy=None, bob_move=None):
        """
        Check the per-stage invariants after Bob's move of a stage.

        Parameters
        ----------
        state : GameState
            State after Bob's move.
        strategy : Strategy or None
            Live strategy whose internal invariants are checked as well.
        bob_move : BobMove or None
            Bob's move of the stage.

        """
        stage = state.stage - 1
        for table_id, table in state.tables.items():
            if len(table) < self._sizes.get(table_id, 0):
                self.problem(stage, 'table %s shrank' % table_id)
            self._sizes[table_id] = len(table)
        if state.K is not None:
            if len(state.K) < self._k_size:
                self.problem(stage, 'K shrank')
            self._k_size = len(state.K)
        bob_tables = state.bob_table_ids()
        if bob_tables != state.kind.bob_tables(stage):
            self.problem(stage, 'Bob announced tables %s' % ' '.join(bob_tables))
        if bob_move is not None:
            for table_id, writes in bob_move.deltas.items():
                for row, col, val, _ in writes:
                    if state.tables[table_id].get(row, col) != val:
                        self.problem(stage, '%s(%i, %i) lost its value' % (table_id, row, col))
        if strategy is not None:
            for message in strategy.check_invariants():
                self.problem(stage, message)
        elif is_filtered(state.kind):
            if self._held is None:
                self._held = HeldCells()
            self._held.update(state.A)
            for message in self._held.check(state.A):
                self.problem(stage, message)
        self.observed += 1

    def monitor(self, transcript):
        """Replay a transcript through the protocol and observe every stage."""
        state = new_game(transcript.kind, transcript.seed)
        for _, alice_move, bob_move in transcript.records:
            submit_alice(state, alice_move)
            submit_bob(state, bob_move)
            self.observe(state, bob_move=bob_move)
        return state

    def report(self, transcript):
        """
        Symbolic verdicts on a finished transcript.

        Returns
        -------
        RefereeReport
            One verdict per condition and subject, plus F (faithfulness) and INV (invariants).

        """
        if self.observed == 0 and transcript.records:
            self.monitor(transcript)
        kind = transcript.kind
        window_rows = self.window[0]
        state = transcript.state
        a_limits = alice_limits(transcript, 'A', window_rows)
        filtered = is_filtered(kind)
        full_a = {}
        rows = {table_id: {} for table_id in state.bob_table_ids()}
        for record in transcript.provenance:
            a_limit = None
            if record.kind == 'mirror':
                if record.ref not in full_a:
                    decl = transcript.limits['A'][record.ref]
                    full_a[record.ref] = known_limit(decl, state.A.row_cells(record.ref))
                a_limit = full_a[record.ref]
            rows.setdefault(record.table, {})[record.row] = (record.kind, resolve_limit(record, a_limit, filtered))
        slots = slots_of(transcript)
        awaiting = {t: awaiting_rows(transcript.cursors, t, window_rows) for t in rows}
        report = RefereeReport(kind.name, stage=state.stage, referee='incremental')
        game = kind.name
        if game in ('g0', 'g1', 'g2', 'ext', 'pp65'):
            rows_b = rows.get('B', {})
            if game == 'ext':
                report.add(check_coverage(a_limits, rows_b, slots.get('B', ()), subject='A',
                                          awaiting=awaiting['B']))
                cursor = [c.index for c in transcript.cursors if c.table == 'B' and c.source == 'beta']
                report.add(check_members_placed(kind.beta, cursor[0] if cursor else 0, rows_b))
            else:
                report.add(check_coverage(a_limits, rows_b, slots.get('B', ()), odd_pending=(game == 'pp65'),
                                          awaiting=awaiting['B']))
            report.add(check_injectivity(rows_b, window_rows))
            if game == 'g2':
                report.extend(check_diag_g2(a_limits, rows_b, window_rows))
            if game == 'pp65':
                for reading, kinds in sorted(READINGS.items()):
                    report.add(check_finite_support(rows_b, kinds, reading))
                for reading, kinds in sorted(READINGS.items()):
                    report.add(check_fill_cover(rows_b, kinds, a_limits, kind.fill, reading))
            if game == 'ext':
                n, m = self.hypothesis
                report.add(check_extension_hypothesis(class_a_members(a_limits), kind.beta, n, m))
        elif game == 'g3':
            r_limits = alice_limits(transcript, 'R', window_rows)
            report.add(check_coverage(a_limits, rows['B'], slots.get('B', ()), index='1', awaiting=awaiting['B']))
            report.add(check_coverage(a_limits, rows['C'], slots.get('C', ()), index='2', awaiting=awaiting['C']))
            report.add(check_injectivity(rows['B'], window_rows, index='3'))
            report.add(check_injectivity(rows['C'], window_rows, index='4'))
            constants = constant_rows(rows)
            report.extend(check_nonreduction(
                r_limits, lambda s: rows['C'], lambda s, v: ('B-row %i' % v, row_limit(rows['B'], v)),
                lambda s: constants['C'].get(2 * int(s[2:])), window_rows, '5', lambda i: ['i=%i' % i]))
            report.extend(check_nonreduction(
                r_limits, lambda s: rows['B'], lambda s, v: ('C-row %i' % v, row_limit(rows['C'], v)),
                lambda s: constants['B'].get(2 * int(s[2:]) + 1), window_rows, '6', lambda i: ['i=%i' % i]))
        elif game == 'g4':
            r_limits = alice_limits(transcript, 'R', window_rows)
            tables = state.bob_table_ids()
            for table_id in tables:
                report.add(check_coverage(a_limits, rows[table_id], slots.get(table_id, ()), '1', table_id,
                                          awaiting=awaiting[table_id]))
            for table_id in tables:
                report.add(check_injectivity(rows[table_id], window_rows, '2', table_id))
            constants = constant_rows(rows)
            report.extend(check_nonreduction(
                r_limits, lambda s: rows['B%i' % subject_k(s)], lambda s, v: direct_sum_lookup(rows, subject_k(s), v),
                lambda s: constants['B%i' % subject_k(s)].get(pair(subject_i(s), subject_k(s))), window_rows, '3',
                lambda i: ['i=%i,k=%i' % (i, k) for k in range(len(tables))]))
        report.add(check_faithfulness(transcript.provenance, state.tables, state.A, filtered, window_rows, state.K))
        report.add(combine('INV', self.problems, []))
        return report


def constant_rows(rows):
    """{table: {m: row}} of the constant rows of every table."""
    constants = {}
    for table_id, table_rows in rows.items():
        constants[table_id] = {}
        for row, (kind, limit) in sorted(table_rows.items()):
            if kind == 'constant':
                constants[table_id].setdefault(limit.values[0], row)
    return constants


def subject_i(subject):
    return int(subject.split(',')[0][2:])


def subject_k(subject):
    return int(subject.split(',')[1][2:])


def direct_sum_lookup(rows, k, value):
    """Row of the direct sum of the tables other than B^k at a given index."""
    summand, row = direct_sum_locate(value, excluded=k)
    table_id = 'B%i' % summand
    if table_id not in rows:
        return '%s-row %i' % (table_id, row), None
    return '%s-row %i' % (table_id, row), row_limit(rows[table_id], row)
