"""
--- Friedberg ---
Row provenance records and enumerator cursors emitted by Bob's strategies.
"""
from friedberg.exceptions import TraceFormatError
from friedberg.tables import FiniteFun, constant


PROVENANCE_KINDS = ('mirror', 'constant', 'odd', 'beta', 'released', 'invalid', 'pending')


class RowProvenance:
    """
    The strategy's account of the limit of one B-side row.

    """
    __slots__ = ('table', 'row', 'kind', 'ref', 'held')

    def __init__(self, table, row, kind, ref=None, held=None):
        """
        Parameters
        ----------
        table : str
            Table id (B | C | B0 ...).
        row : int
            Row number.
        kind : str
            mirror | constant | odd | beta | released | invalid | pending.
        ref : int or FiniteFun or None
            A-row (mirror), constant value (constant) or committed function (odd, beta, released).
        held : tuple or None
            Held (col, val) of the mirrored A-row at the end of the run.

        """
        if kind not in PROVENANCE_KINDS:
            raise TraceFormatError('Unknown provenance kind: %s' % kind)
        self.table, self.row, self.kind, self.ref, self.held = table, row, kind, ref, held

    def __repr__(self):
        return "<RowProvenance %s>" % self.canonical()

    def __eq__(self, other):
        return isinstance(other, RowProvenance) and self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    @property
    def is_mirror(self):
        return self.kind == 'mirror'

    def canonical(self):
        words = [self.table, str(self.row), self.kind]
        if self.kind == 'mirror':
            words += [str(self.ref), '-' if self.held is None else '%i:%i' % self.held]
        elif self.kind == 'constant':
            words.append(str(self.ref))
        elif self.kind in ('odd', 'beta', 'released'):
            words.append(self.ref.canonical())
        return ' '.join(words)

    @classmethod
    def parse(cls, words):
        """Parse the words following a 'P' record tag."""
        try:
            table, row, kind = words[0], int(words[1]), words[2]
            if kind == 'mirror':
                held = None if words[4] == '-' else tuple(int(i) for i in words[4].split(':'))
                return cls(table, row, kind, int(words[3]), held)
            if kind == 'constant':
                return cls(table, row, kind, int(words[3]))
            if kind in ('odd', 'beta', 'released'):
                return cls(table, row, kind, FiniteFun.parse(words[3]))
            return cls(table, row, kind)
        except (IndexError, ValueError):
            raise TraceFormatError('Bad provenance record: %s' % ' '.join(words))


class EnumeratorCursor:
    """
    Position of an exhaustion assistant at the end of a run.

    Members at or after the cursor are not placed yet but will be; for the
    constant source, index is the number of constant assistants started.
    The 'mains' source counts the mirror assistants started on a table and an
    'await' cursor names an A-row whose mirror assistant holds no row.

    """
    __slots__ = ('table', 'source', 'index')

    def __init__(self, table, source, index):
        self.table, self.source, self.index = table, source, index

    def __repr__(self):
        return "<EnumeratorCursor %s>" % self.canonical()

    def __eq__(self, other):
        return isinstance(other, EnumeratorCursor) and self.canonical() == other.canonical()

    def canonical(self):
        return '%s %s %i' % (self.table, self.source, self.index)

    @classmethod
    def parse(cls, words):
        try:
            return cls(words[0], words[1], int(words[2]))
        except (IndexError, ValueError):
            raise TraceFormatError('Bad enumerator cursor: %s' % ' '.join(words))


def known_limit(decl, cells):
    """
    Limit of one of Alice's rows when it is known from its declaration.

    A finite declaration is known once the concrete row has reached it; a
    total declaration is known while the concrete row agrees with it.

    Parameters
    ----------
    decl : LimitDecl
        Declared limit.
    cells : dict
        Concrete cells of the row.

    Returns
    -------
    FiniteFun or Periodic or None
        None when the limit is unknown.

    """
    if decl.kind == 'undeclared' or not decl.consistent_with(cells):
        return None
    if decl.kind == 'finite':
        return decl.value if decl.reached(cells) else None
    return decl.value


def resolve_limit(provenance, a_limit=None, filtered=True):
    """
    Limit object of a provenance row.

    Parameters
    ----------
    provenance : RowProvenance
        Provenance record.
    a_limit : FiniteFun or Periodic or None
        Known limit of the mirrored A-row (mirror rows only).
    filtered : bool
        Mirrors follow the filtered view, which hides the held cell of odd rows.

    Returns
    -------
    FiniteFun or Periodic or None
        None when the limit is unknown (pending).

    """
    kind = provenance.kind
    if kind == 'constant':
        return constant(provenance.ref)
    if kind in ('odd', 'beta', 'released'):
        return provenance.ref
    if kind != 'mirror' or a_limit is None:
        return None
    if not filtered or not isinstance(a_limit, FiniteFun) or not a_limit.is_odd():
        return a_limit
    if provenance.held is None or a_limit.get(provenance.held[0]) != provenance.held[1]:
        return None
    return FiniteFun({c: v for c, v in a_limit.items if c != provenance.held[0]})


def awaiting_rows(cursors, table, window_rows):
    """
    A-rows below window_rows whose mirror assistant on a table has not settled.

    These are the A-rows named by an 'await' cursor of the table and every
    A-row from the 'mains' count on, whose assistant has not started yet.

    """
    started, awaiting = 0, set()
    for cursor in cursors:
        if cursor.table != table:
            continue
        if cursor.source == 'mains':
            started = cursor.index
        elif cursor.source == 'await':
            awaiting.add(cursor.index)
    return {row for row in awaiting if row < window_rows} | set(range(started, window_rows))
