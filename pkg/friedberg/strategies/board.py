"""
--- Friedberg ---
Output boards of Bob: one table with its reservations, fresh-row cursor and odd registry.
"""
import logging
from friedberg.exceptions import StrategyError
from friedberg.tables import FiniteTable
from friedberg.referee.provenance import RowProvenance


class OddRegistry:
    """
    Functions committed to a board by odd-ification, enumeration, B-ification or release.

    """
    def __init__(self, require_odd=True):
        self.committed = {}
        self.col_watermark = 0
        self.require_odd = require_odd
        self._order = []
        self._rows = set()
        self._checked = 0

    def __repr__(self):
        return "<OddRegistry committed: %i | watermark: %i>" % (len(self.committed), self.col_watermark)

    def __contains__(self, fun):
        return fun in self.committed

    def __len__(self):
        return len(self.committed)

    def __iter__(self):
        return iter(self.committed)

    def bump(self, col):
        """Keep the watermark strictly above col."""
        if col >= self.col_watermark:
            self.col_watermark = col + 1

    def commit(self, fun, row):
        if fun in self.committed:
            raise StrategyError('%s is committed twice (rows %i and %i)' % (fun.canonical(), self.committed[fun], row))
        if self.require_odd and not fun.is_odd():
            raise StrategyError('Committed function %s is not odd' % fun.canonical())
        self.committed[fun] = row
        self._order.append(fun)

    def check(self):
        """Problems among the functions committed since the last check."""
        problems = []
        for fun in self._order[self._checked:]:
            row = self.committed[fun]
            if row in self._rows:
                problems.append('Row %i holds two committed functions' % row)
            self._rows.add(row)
            if self.require_odd and not fun.is_odd():
                problems.append('Committed function %s is even' % fun.canonical())
        self._checked = len(self._order)
        return problems


class Board:
    """
    One of Bob's output tables together with the strategy's bookkeeping for it.

    """
    def __init__(self, table_id='B', require_odd=True, events=None):
        """
        Create an empty board.

        Parameters
        ----------
        table_id : str
            Table id (B | C | B0 ...).
        require_odd : bool
            Committed functions must be odd (False for the extension game).
        events : list or None
            Shared event log receiving (stage, actor, action, table, row) tuples.

        """
        self.table = FiniteTable(table_id)
        self.registry = OddRegistry(require_odd=require_odd)
        self.cursor = 0
        self.owner = {}
        self.final = {}
        self.serial = 0
        self.stage = 0
        self.events = [] if events is None else events
        self.writes = []
        self.k_delta = []

    def __repr__(self):
        return "<Board %s | rows used: %i | reserved: %i | committed: %i>" % (self.table_id, self.cursor,
                                                                          len(self.owner), len(self.registry))

    @property
    def table_id(self):
        return self.table.name

    def log(self, actor, action, row):
        self.events.append((self.stage, actor, action, self.table_id, row))
        logging.debug('Stage %i: %s %s %s-row %i' % (self.stage, actor, action, self.table_id, row))

    def reserve_fresh_row(self, assistant):
        """
        Reserve the least row never used before for an assistant.

        Returns
        -------
        int
            Reserved row.

        """
        row = self.cursor
        self.cursor += 1
        self.owner[row] = assistant
        assistant.reserved[self.table_id] = row
        self.log(assistant.label, 'reserve', row)
        return row

    def drop(self, assistant):
        """Drop an assistant's reservation and return the row."""
        row = assistant.reserved.pop(self.table_id)
        del self.owner[row]
        return row

    def write(self, row, col, val, actor):
        if self.table.set_cell(row, col, val):
            self.registry.bump(col)
            self.writes.append((row, col, val, actor))

    def commit(self, row, kind):
        """Freeze a row as a committed function of the given provenance kind."""
        fun = self.table.row(row)
        self.registry.commit(fun, row)
        self.final[row] = RowProvenance(self.table_id, row, kind, fun)
        return fun

    def oddify(self, assistant, actor, fill=None):
        """
        Make an assistant's reserved row new and odd, then drop the reservation.

        One cell is added to an even row and two to an odd row, at the first
        columns from the watermark up (from the domain of fill when given);
        values are the board's serial number or fill(col).

        Returns
        -------
        int
            The odd-ified row.

        """
        row = assistant.reserved[self.table_id]
        n_cells = 2 if self.table.support_size(row) % 2 == 1 else 1
        watermark = self.registry.col_watermark
        if fill is None:
            cells = [(col, self.serial) for col in range(watermark, watermark + n_cells)]
        else:
            cells = [(col, fill(col)) for col in fill.columns_from(watermark, n_cells)]
        for col, val in cells:
            self.write(row, col, val, actor + ':oddify')
        self.serial += 1
        self.drop(assistant)
        self.commit(row, 'odd')
        self.log(actor, 'oddify', row)
        return row

    def bify(self, assistant, actor, beta, limit=None):
        """
        Extend an assistant's reserved row to the least unused member of beta, then drop the reservation.

        Raises
        ------
        StrategyError
            If no unused member of beta extends the row.

        """
        row = assistant.reserved[self.table_id]
        found = beta.least_unused_extension(self.table.row(row), self.registry, limit)
        if found is None:
            raise StrategyError('No unused beta member extends %s-row %i' % (self.table_id, row))
        _, member = found
        for col, val in member.items:
            self.write(row, col, val, actor + ':bify')
        self.drop(assistant)
        self.commit(row, 'beta')
        self.log(actor, 'bify', row)
        return row

    def invalidate(self, assistant, actor):
        """Put an assistant's reserved row into K and drop the reservation."""
        row = self.drop(assistant)
        self.final[row] = RowProvenance(self.table_id, row, 'invalid')
        self.k_delta.append(row)
        self.log(actor, 'invalidate', row)
        return row

    def place(self, assistant, fun, kind):
        """
        Write a whole function into a fresh row and commit it (enumerators and the copier).

        """
        row = self.reserve_fresh_row(assistant)
        for col, val in fun.items:
            self.write(row, col, val, assistant.label)
        self.drop(assistant)
        self.commit(row, kind)
        self.log(assistant.label, 'place', row)
        return row

    def extend_constant(self, assistant):
        """Add the least unfilled column of a constant assistant's row, holding her constant."""
        row = assistant.reserved[self.table_id]
        col = self.table.support_size(row)
        while self.table.get(row, col) is not None:
            col += 1
        self.write(row, col, assistant.index, assistant.label)

    def flush(self):
        """Writes and K additions made since the last flush."""
        writes, k_delta = self.writes, self.k_delta
        self.writes, self.k_delta = [], []
        return writes, k_delta

    def provenance(self, held=None):
        """
        Provenance of every used row of the board.

        Parameters
        ----------
        held : HeldCells or None
            Held cells of the filtered view, recorded on mirror rows.

        """
        records = []
        for row in range(self.cursor):
            if row in self.final:
                records.append(self.final[row])
                continue
            assistant = self.owner.get(row)
            if assistant is None:
                records.append(RowProvenance(self.table_id, row, 'pending'))
            elif assistant.role == 'mirror':
                records.append(RowProvenance(self.table_id, row, 'mirror', assistant.index,
                                             None if held is None else held[assistant.index]))
            elif assistant.role == 'constant':
                records.append(RowProvenance(self.table_id, row, 'constant', assistant.index))
            else:
                records.append(RowProvenance(self.table_id, row, 'pending'))
        return records

    def check(self):
        """Reservation exclusivity and registry problems (empty list when sound)."""
        problems = self.registry.check()
        for row, assistant in self.owner.items():
            if assistant.reserved.get(self.table_id) != row:
                problems.append('%s-row %i is owned by %s who reserves %s' % (self.table_id, row, assistant.label,
                                                                              assistant.reserved.get(self.table_id)))
            if row in self.final:
                problems.append('%s-row %i is reserved after being frozen' % (self.table_id, row))
        return problems
