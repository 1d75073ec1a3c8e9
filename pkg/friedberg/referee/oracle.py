"""
--- Friedberg ---
Brute-force referee: winner conditions recomputed from the concrete tables with naive loops.
"""
from friedberg.tables import FiniteFun, Periodic, limits_equal, limit_value, direct_sum_row_index, pair
from friedberg.protocol.moves import new_game, submit_alice, submit_bob
from friedberg.strategies.enumeration import OddEnumeration
from .hypotheses import check_extension_hypothesis, class_a_members
from .report import RefereeReport, Verdict, combine


def row_limit_from_cells(decl, cells):
    """Limit of one of Alice's rows, or None when the declaration does not settle it."""
    if decl.kind == 'undeclared':
        return None
    for col, val in cells.items():
        if decl.value_at(col) != val:
            return None
    if decl.kind == 'finite':
        return decl.value if FiniteFun(cells) == decl.value else None
    return decl.value


def alice_window(transcript, table, window_rows):
    concrete = transcript.state.tables[table]
    return [row_limit_from_cells(transcript.limits[table][row], concrete.row_cells(row))
            for row in range(window_rows)]


def bob_rows(transcript, filtered):
    """{table: {row: (kind, limit)}} with committed rows read back from the tables."""
    state = transcript.state
    rows = {table_id: {} for table_id in state.bob_table_ids()}
    for record in transcript.provenance:
        cells = state.tables[record.table].row_cells(record.row) if record.table in state.tables else {}
        if record.kind in ('odd', 'beta', 'released'):
            limit = FiniteFun(cells)
        elif record.kind == 'constant':
            limit = Periodic((record.ref,))
        elif record.kind == 'mirror':
            a_limit = row_limit_from_cells(transcript.limits['A'][record.ref], state.A.row_cells(record.ref))
            limit = a_limit
            if filtered and isinstance(a_limit, FiniteFun) and len(a_limit.items) % 2 == 1:
                limit = None
                if record.held is not None and a_limit.get(record.held[0]) == record.held[1]:
                    limit = FiniteFun([(c, v) for c, v in a_limit.items if c != record.held[0]])
        else:
            limit = None
        rows.setdefault(record.table, {})[record.row] = (record.kind, limit)
    return rows


def covered_by_slot(limit, cursor, enumeration):
    """True iff limit is a member of the enumeration outside its first cursor members."""
    if limit is None:
        return False
    if cursor.source == 'const':
        return isinstance(limit, Periodic) and len(limit.values) == 1 and limit.values[0] >= cursor.index
    if not isinstance(limit, FiniteFun) or limit not in enumeration:
        return False
    for n in range(cursor.index):
        member = enumeration.member(n)
        if member is None:
            return False
        if member == limit:
            return False
    return True


def naive_awaiting(cursors, window_rows):
    """A-rows whose mirror assistant holds no row, or whose assistant has not started."""
    started = max([c.index for c in cursors if c.source == 'mains'] or [0])
    named = [c.index for c in cursors if c.source == 'await']
    return [row for row in range(window_rows) if row >= started or row in named]


def naive_coverage(a_limits, table_rows, cursors, enumeration, index, subject, odd_pending=False):
    problems, pending = [], []
    awaiting = naive_awaiting(cursors, len(a_limits))
    slot_cursors = [c for c in cursors if c.source in ('odd', 'beta', 'const')]
    limits, unknown = set(), False
    for row in table_rows:
        kind, other = table_rows[row]
        if kind == 'invalid':
            continue
        if other is None:
            unknown = True
        else:
            limits.add(other)
    for a_row, limit in enumerate(a_limits):
        if limit is None:
            pending.append('A-row %i unknown' % a_row)
            continue
        found = limit in limits
        if found or any(covered_by_slot(limit, c, enumeration) for c in slot_cursors):
            continue
        settled = [j for j in range(a_row) if j not in awaiting and limits_equal(a_limits[j], limit)]
        if a_row in awaiting and not settled:
            pending.append('A-row %i awaiting' % a_row)
            continue
        if unknown or (odd_pending and isinstance(limit, FiniteFun) and len(limit.items) % 2 == 1):
            pending.append('A-row %i' % a_row)
        else:
            problems.append('A-row %i missing' % a_row)
    return combine(index, problems, pending, subject)


def naive_injectivity(table_rows, window_rows, index, subject):
    problems, pending = [], []
    valid = [(row, limit) for row, (kind, limit) in table_rows.items() if row < window_rows and kind != 'invalid']
    for row, limit in valid:
        if limit is None:
            pending.append('row %i unknown' % row)
    for first, limit in valid:
        for second, other in valid:
            if first < second and limit is not None and other is not None and limits_equal(limit, other):
                problems.append('rows %i and %i equal' % (first, second))
    return combine(index, problems, pending, subject)


def naive_witness(total, src_of, dst_of, candidates):
    for j in candidates:
        src = src_of(j)
        target = limit_value(total, j)
        if src is None or target is None:
            continue
        dst = dst_of(target)
        if dst is not None and limits_equal(src, dst) is False:
            return j
    return None


def first_row(table_rows, kind, ref):
    rows = [row for row, (k, limit) in table_rows.items()
            if k == kind and isinstance(limit, Periodic) and limit.values == (ref,)]
    return min(rows) if rows else None


def naive_locate(tables, value, excluded):
    """Summand table and row with direct_sum_row_index(l, m, excluded) = value, by search."""
    for l in range(len(tables)):
        if l == excluded:
            continue
        for m in range(value + 1):
            if direct_sum_row_index(l, m, excluded=excluded) == value:
                return 'B%i' % l, m
    return None, None


def naive_faithfulness(transcript, window_rows, filtered):
    state = transcript.state
    problems = []
    for record in transcript.provenance:
        if record.row >= window_rows:
            continue
        cells = state.tables[record.table].row_cells(record.row)
        if record.kind in ('odd', 'beta', 'released'):
            expected = dict(record.ref.items)
            if cells != expected:
                problems.append('%s-row %i differs from its function' % (record.table, record.row))
        elif record.kind == 'constant':
            for col in cells:
                if cells[col] != record.ref:
                    problems.append('%s-row %i not constant' % (record.table, record.row))
        elif record.kind == 'mirror':
            a_cells = state.A.row_cells(record.ref)
            for col in cells:
                if col not in a_cells or a_cells[col] != cells[col]:
                    problems.append('%s-row %i leaves A-row %i' % (record.table, record.row, record.ref))
                elif filtered and record.held is not None and record.held == (col, cells[col]):
                    problems.append('%s-row %i shows a held cell' % (record.table, record.row))
        elif record.kind == 'invalid' and state.K is not None and record.row not in state.K:
            problems.append('%s-row %i not in K' % (record.table, record.row))
    return combine('F', problems, [])


def naive_invariants(transcript):
    """Replay the records and check table growth and the announced table shape."""
    problems = []
    state = new_game(transcript.kind, transcript.seed)
    sizes = {}
    for stage, alice_move, bob_move in transcript.records:
        submit_alice(state, alice_move)
        submit_bob(state, bob_move)
        for table_id in state.tables:
            if len(state.tables[table_id]) < sizes.get(table_id, 0):
                problems.append('stage %i: %s shrank' % (stage, table_id))
            sizes[table_id] = len(state.tables[table_id])
        if state.bob_table_ids() != transcript.kind.bob_tables(stage):
            problems.append('stage %i: wrong tables' % stage)
    return combine('INV', problems + list(transcript.problems), [])


def brute_force_referee(transcript, window=(64, 32), hypothesis=(3, 100)):
    """
    Recompute every applicable winner condition of a transcript without the incremental machinery.

    Parameters
    ----------
    transcript : Transcript
        Finished (or replayed) transcript.
    window : tuple
        (rows, cols) window.
    hypothesis : tuple
        (N, M) of the extension-hypothesis proxy (ext only).

    Returns
    -------
    RefereeReport
        Verdicts keyed like the incremental referee's.

    """
    kind = transcript.kind
    game = kind.name
    window_rows = window[0]
    filtered = game not in ('g1', 'ext')
    a_limits = alice_window(transcript, 'A', window_rows)
    rows = bob_rows(transcript, filtered)
    cursors = {}
    for cursor in transcript.cursors:
        cursors.setdefault(cursor.table, []).append(cursor)
    enumeration = kind.beta if game == 'ext' else OddEnumeration()
    report = RefereeReport(game, stage=transcript.state.stage, referee='brute-force')
    if game in ('g0', 'g1', 'g2', 'ext', 'pp65'):
        table_rows = rows.get('B', {})
        report.add(naive_coverage(a_limits, table_rows, cursors.get('B', []), enumeration, '1',
                                  'A' if game == 'ext' else '*', odd_pending=(game == 'pp65')))
        if game == 'ext':
            placed = [c.index for c in cursors.get('B', []) if c.source == 'beta']
            problems = []
            limits = {limit for _, limit in table_rows.values() if limit is not None}
            for n in range(placed[0] if placed else 0):
                member = kind.beta.member(n)
                if member not in limits:
                    problems.append('member %i missing' % n)
            report.add(combine('1', problems, [], 'beta'))
        report.add(naive_injectivity(table_rows, window_rows, '2', '*'))
        if game == 'g2':
            totals = [i for i, limit in enumerate(a_limits) if isinstance(limit, Periodic)]
            if not totals:
                report.add(Verdict('3', 'holds', '*'))
            for i in totals:
                candidates = [i] + [j for j in range(window_rows) if j != i]
                j = naive_witness(a_limits[i], lambda j: a_limits[j] if j < window_rows else None,
                                  lambda r: table_rows[r][1] if r in table_rows else None, candidates)
                report.add(Verdict('3', 'pending' if j is None else 'holds', 'i=%i' % i))
        if game == 'pp65':
            for reading, kinds in (('nonmirror', ('odd', 'released')), ('released', ('released',))):
                problems, pending = [], []
                for row, (row_kind, limit) in table_rows.items():
                    if row_kind in kinds and limit is None:
                        pending.append('row %i' % row)
                    elif row_kind in kinds and not isinstance(limit, FiniteFun):
                        problems.append('row %i total' % row)
                report.add(combine('C2', problems, pending, reading))
            for reading, kinds in (('nonmirror', ('odd', 'released')), ('released', ('released',))):
                problems, pending = [], []
                for row, (row_kind, g) in table_rows.items():
                    if row_kind not in kinds:
                        continue
                    if g is None:
                        pending.append('row %i' % row)
                        continue
                    if not isinstance(g, FiniteFun):
                        problems.append('row %i total' % row)
                        continue
                    hs = [None] + [h for h in a_limits if h is not None]
                    if not any(all(kind.fill(c) == v or (h is not None and limit_value(h, c) == v)
                                   for c, v in g.items) for h in hs):
                        pending.append('row %i uncovered' % row)
                report.add(combine('C3', problems, pending, reading))
        if game == 'ext':
            n, m = hypothesis
            report.add(check_extension_hypothesis(class_a_members(dict(enumerate(a_limits))), kind.beta, n, m))
    elif game == 'g3':
        r_limits = alice_window(transcript, 'R', window_rows)
        report.add(naive_coverage(a_limits, rows['B'], cursors.get('B', []), enumeration, '1', '*'))
        report.add(naive_coverage(a_limits, rows['C'], cursors.get('C', []), enumeration, '2', '*'))
        report.add(naive_injectivity(rows['B'], window_rows, '3', '*'))
        report.add(naive_injectivity(rows['C'], window_rows, '4', '*'))
        for index, src, dst, shift in (('5', 'C', 'B', 0), ('6', 'B', 'C', 1)):
            totals = [i for i, limit in enumerate(r_limits) if isinstance(limit, Periodic)]
            if not totals:
                report.add(Verdict(index, 'holds', '*'))
            for i in totals:
                first = first_row(rows[src], 'constant', 2 * i + shift)
                candidates = ([] if first is None else [first]) + [j for j in range(window_rows) if j != first]
                j = naive_witness(r_limits[i], lambda j, s=src: rows[s][j][1] if j in rows[s] else None,
                                  lambda v, d=dst: rows[d][v][1] if v in rows[d] else None, candidates)
                report.add(Verdict(index, 'pending' if j is None else 'holds', 'i=%i' % i))
    elif game == 'g4':
        r_limits = alice_window(transcript, 'R', window_rows)
        tables = transcript.state.bob_table_ids()
        for table_id in tables:
            report.add(naive_coverage(a_limits, rows[table_id], cursors.get(table_id, []), enumeration, '1',
                                      table_id))
        for table_id in tables:
            report.add(naive_injectivity(rows[table_id], window_rows, '2', table_id))
        totals = [i for i, limit in enumerate(r_limits) if isinstance(limit, Periodic)]
        if not totals:
            report.add(Verdict('3', 'holds', '*'))
        for i in totals:
            for k in range(len(tables)):
                src = rows['B%i' % k]
                first = None
                for row, (row_kind, limit) in src.items():
                    if row_kind == 'constant' and limit.values == (pair(i, k),):
                        first = row if first is None else min(first, row)
                candidates = ([] if first is None else [first]) + [j for j in range(window_rows) if j != first]

                def dst_of(v, k=k):
                    table_id, row = naive_locate(tables, v, k)
                    if table_id is None or row not in rows[table_id]:
                        return None
                    return rows[table_id][row][1]
                j = naive_witness(r_limits[i], lambda j, s=src: s[j][1] if j in s else None, dst_of, candidates)
                report.add(Verdict('3', 'pending' if j is None else 'holds', 'i=%i,k=%i' % (i, k)))
    report.add(naive_faithfulness(transcript, window_rows, filtered))
    report.add(naive_invariants(transcript))
    return report