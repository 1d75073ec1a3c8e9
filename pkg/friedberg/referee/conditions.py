"""
--- Friedberg ---
Winner conditions decided on limit objects.

Row maps passed around here are {row: (kind, limit)} where kind is the
provenance kind and limit a FiniteFun, a Periodic or None (unknown).
"""
from friedberg.tables import FiniteFun, Periodic, limit_difference, limit_value
from .report import Verdict, combine


def describe(limit):
    if limit is None:
        return '?'
    if isinstance(limit, Periodic):
        return 'periodic(%s)' % limit.canonical()
    return '{%s}' % limit.canonical()


class Slot:
    """
    Symbolic coverage by an exhaustion assistant: limits at or after its cursor
    will be placed later.

    """
    def __init__(self, source, index, enumeration=None):
        self.source, self.index, self.enumeration = source, index, enumeration

    def __repr__(self):
        return "<Slot %s %i>" % (self.source, self.index)

    def covers(self, limit):
        if limit is None:
            return False
        if self.source == 'const':
            return isinstance(limit, Periodic) and limit.is_constant() and limit.values[0] >= self.index
        if not isinstance(limit, FiniteFun) or limit not in self.enumeration:
            return False
        if self.enumeration.is_finite() and self.index >= len(self.enumeration):
            return False
        return self.enumeration.position_key(limit) >= self.enumeration.cursor_key(self.index)


def check_coverage(a_limits, rows, slots=(), index='1', subject='*', odd_pending=False, awaiting=()):
    """
    Every A-row limit equals the limit of some valid row (or lies in an exhaustion slot).

    An absent limit is pending while the A-row's mirror assistant has not
    settled on a row, unless a settled earlier A-row shares the limit.

    Parameters
    ----------
    a_limits : dict
        {A-row: limit} over the window.
    rows : dict
        {row: (kind, limit)} of the output table.
    slots : list
        Slot objects of the output table.
    odd_pending : bool
        Treat uncovered odd limits as awaiting the copier instead of violated.
    awaiting : set
        A-rows whose mirror assistant holds no row or has not started.

    """
    found = {}
    unknown = False
    for row, (kind, limit) in sorted(rows.items()):
        if kind == 'invalid':
            continue
        if limit is None:
            unknown = True
        else:
            found.setdefault(limit, row)
    problems, pending = [], []
    for a_row, limit in sorted(a_limits.items()):
        if limit is None:
            pending.append('A-row %i has no known limit' % a_row)
        elif limit in found or any(slot.covers(limit) for slot in slots):
            continue
        elif a_row in awaiting and not any(j not in awaiting and a_limits.get(j) == limit for j in range(a_row)):
            pending.append('A-row %i awaits its mirror assistant' % a_row)
        elif unknown or (odd_pending and isinstance(limit, FiniteFun) and limit.is_odd()):
            pending.append('A-row %i limit %s not among known rows' % (a_row, describe(limit)))
        else:
            problems.append('A-row %i limit %s is absent' % (a_row, describe(limit)))
    return combine(index, problems, pending, subject)


def check_members_placed(enumeration, cursor, rows, index='1', subject='beta'):
    """Every member listed before the cursor is the limit of some row."""
    found = {limit for kind, limit in rows.values() if limit is not None}
    problems = []
    for n in range(cursor):
        member = enumeration.member(n)
        if member not in found:
            problems.append('member %i %s is absent' % (n, describe(member)))
    return combine(index, problems, [], subject)


def check_injectivity(rows, window_rows, index='2', subject='*'):
    """
    Valid rows below window_rows have pairwise distinct limits.

    """
    seen = {}
    problems, pending = [], []
    for row, (kind, limit) in sorted(rows.items()):
        if row >= window_rows or kind == 'invalid':
            continue
        if limit is None:
            pending.append('row %i has no known limit' % row)
        elif limit in seen:
            problems.append('rows %i and %i both limit to %s' % (seen[limit], row, describe(limit)))
        else:
            seen[limit] = row
    return combine(index, problems, pending, subject)


def row_limit(rows, row):
    entry = rows.get(row)
    return None if entry is None else entry[1]


def find_witness(value_limit, src_limit_of, dst_limit_of, candidates):
    """
    First j among candidates with dst(value(j)) != src(j), both limits known.

    Returns
    -------
    tuple or None
        (j, dst row description, differing column).

    """
    for j in candidates:
        src = src_limit_of(j)
        target = limit_value(value_limit, j)
        if src is None or target is None:
            continue
        dst_name, dst = dst_limit_of(target)
        if dst is None:
            continue
        col = limit_difference(dst, src)
        if col is not None:
            return j, dst_name, col
    return None


def candidate_rows(first, window_rows):
    candidates = [] if first is None else [first]
    return candidates + [j for j in range(window_rows) if j != first]


def total_rows(limits):
    return sorted(row for row, limit in limits.items() if isinstance(limit, Periodic))


def check_diag_g2(a_limits, rows, window_rows, index='3'):
    """
    For every total A-row i there is j with B(A(i,j)) != A(j); j = i is tried first.

    """
    totals = total_rows(a_limits)
    if not totals:
        return [Verdict(index, 'holds', '*', 'vacuous')]
    verdicts = []
    for i in totals:
        witness = find_witness(a_limits[i], lambda j: a_limits.get(j),
                               lambda r: ('B-row %i' % r, row_limit(rows, r)), candidate_rows(i, window_rows))
        if witness is None:
            verdicts.append(Verdict(index, 'pending', 'i=%i' % i, 'no witness within window'))
        else:
            verdicts.append(Verdict(index, 'holds', 'i=%i' % i, 'j=%i %s col=%i' % witness))
    return verdicts


def check_nonreduction(r_limits, src_rows, dst_lookup, witness_of, window_rows, index, subjects):
    """
    For every total R-row i there is j with dst(R(i,j)) != src(j).

    Parameters
    ----------
    r_limits : dict
        {R-row: limit} over the window.
    src_rows : callable
        src_rows(subject) -> {row: (kind, limit)} of the source table.
    dst_lookup : callable
        dst_lookup(subject, value) -> (description, limit) of the row R(i,j) points at.
    witness_of : callable
        witness_of(subject) -> row tried first (the constant assistant's row) or None.
    subjects : callable
        subjects(i) -> subject labels checked for R-row i.

    """
    totals = total_rows(r_limits)
    if not totals:
        return [Verdict(index, 'holds', '*', 'vacuous')]
    verdicts = []
    for i in totals:
        for subject in subjects(i):
            rows = src_rows(subject)
            witness = find_witness(r_limits[i], lambda j: row_limit(rows, j),
                                   lambda v: dst_lookup(subject, v),
                                   candidate_rows(witness_of(subject), window_rows))
            if witness is None:
                verdicts.append(Verdict(index, 'pending', subject, 'no witness within window'))
            else:
                verdicts.append(Verdict(index, 'holds', subject, 'j=%i %s col=%i' % witness))
    return verdicts


def check_faithfulness(provenance, tables, A, held_hidden=True, window_rows=None, K=None):
    """
    Concrete cells of every row agree with its provenance.

    Committed rows hold exactly their function, constant rows only their constant,
    and mirror rows a subset of their A-row (without the held cell).

    """
    problems = []
    for record in provenance:
        if window_rows is not None and record.row >= window_rows:
            continue
        cells = tables[record.table].row_cells(record.row)
        name = '%s-row %i' % (record.table, record.row)
        if record.kind in ('odd', 'beta', 'released'):
            if FiniteFun(cells) != record.ref:
                problems.append('%s holds {%s}, not %s' % (name, FiniteFun(cells).canonical(), describe(record.ref)))
        elif record.kind == 'constant':
            wrong = sorted(c for c, v in cells.items() if v != record.ref)
            if wrong:
                problems.append('%s is not constant %i at col %i' % (name, record.ref, wrong[0]))
        elif record.kind == 'mirror':
            a_cells = A.row_cells(record.ref)
            for col, val in sorted(cells.items()):
                if a_cells.get(col) != val or (held_hidden and record.held == (col, val)):
                    problems.append('%s col %i is not a visible cell of A-row %i' % (name, col, record.ref))
                    break
        elif record.kind == 'invalid' and K is not None and record.row not in K:
            problems.append('%s is invalid but not in K' % name)
    return combine('F', problems, [])


def check_finite_support(rows, kinds, subject):
    """Every row of the given provenance kinds has a finite limit."""
    problems, pending = [], []
    for row, (kind, limit) in sorted(rows.items()):
        if kind not in kinds:
            continue
        if limit is None:
            pending.append('row %i has no known limit' % row)
        elif not isinstance(limit, FiniteFun):
            problems.append('row %i limits to the total %s' % (row, describe(limit)))
    return combine('C2', problems, pending, subject)


def within_fill(limit, fill, a_limit):
    """True iff every cell of limit is a cell of fill or of a_limit."""
    for col, val in limit.items:
        if fill(col) == val:
            continue
        if a_limit is None or limit_value(a_limit, col) != val:
            return False
    return True


def check_fill_cover(rows, kinds, a_limits, fill, subject):
    """
    Every row g of the given kinds satisfies g <= f u h for some A-limit h in the window.

    """
    problems, pending = [], []
    known = [(a_row, h) for a_row, h in sorted(a_limits.items()) if h is not None]
    for row, (kind, limit) in sorted(rows.items()):
        if kind not in kinds:
            continue
        if limit is None:
            pending.append('row %i has no known limit' % row)
        elif isinstance(limit, Periodic):
            problems.append('row %i limits to the total %s' % (row, describe(limit)))
        elif not within_fill(limit, fill, None) and not any(within_fill(limit, fill, h) for _, h in known):
            pending.append('row %i: no A-row h in the window with g <= f u h' % row)
    return combine('C3', problems, pending, subject)
