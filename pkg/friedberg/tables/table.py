"""
--- Friedberg ---
Monotone sparse tables: the boards A, R, B, C, B^k and the invalidation set K.
"""
import hashlib
import numpy as np
from friedberg.exceptions import ConflictingWrite
from .finitefun import FiniteFun


class FiniteTable:
    """
    Append-only finite partial function (row, col) -> value.

    Rows are stored as dictionaries col -> value; a row without cells is
    simply absent (undefined everywhere).

    """
    def __init__(self, name='A', cells=None):
        """
        Create an empty table.

        Parameters
        ----------
        name : str
            Table id used in error messages and traces (A | R | B | C | B0 ...).
        cells : iterable or None
            Initial (row, col, val) writes.

        """
        self.name = name
        self.rows = {}
        self.n_cells = 0
        if cells is not None:
            for row, col, val in cells:
                self.set_cell(row, col, val)

    def __repr__(self):
        return "<FiniteTable %s | rows: %i | cells: %i>" % (self.name, len(self.rows), self.n_cells)

    def __len__(self):
        return self.n_cells

    def __eq__(self, other):
        return isinstance(other, FiniteTable) and self.rows == other.rows

    def get(self, row, col):
        """Cell value or None when the cell is empty."""
        cells = self.rows.get(row)
        if cells is None:
            return None
        return cells.get(col)

    def check_cell(self, row, col, val):
        """
        Raise ConflictingWrite if writing val at (row, col) would erase a value.

        """
        old = self.get(row, col)
        if old is not None and old != val:
            raise ConflictingWrite(self.name, row, col, old, val)

    def set_cell(self, row, col, val):
        """
        Write a cell; rewriting the same value is a no-op.

        Parameters
        ----------
        row, col, val : int
            Cell coordinates and natural-number value.

        Returns
        -------
        bool
            True if the cell was newly filled.

        """
        self.check_cell(row, col, val)
        cells = self.rows.setdefault(row, {})
        if col in cells:
            return False
        cells[col] = val
        self.n_cells += 1
        return True

    def row_cells(self, row):
        """Cells of a row as a dictionary (do not modify)."""
        return self.rows.get(row, {})

    def row(self, row):
        """Snapshot of a row as a FiniteFun."""
        return FiniteFun(self.rows.get(row, {}))

    def support_size(self, row):
        return len(self.rows.get(row, ()))

    def row_ids(self):
        """Sorted ids of rows holding at least one cell."""
        return sorted(self.rows)

    def max_row(self):
        return max(self.rows) if self.rows else -1

    def max_col(self):
        return max((max(cells) for cells in self.rows.values()), default=-1)

    def cells(self):
        """All cells as sorted (row, col, val) triples."""
        for row in sorted(self.rows):
            cells = self.rows[row]
            for col in sorted(cells):
                yield row, col, cells[col]

    def issubset(self, other):
        """True iff every cell of this table is a cell of other."""
        return all(other.get(r, c) == v for r, c, v in self.cells())

    def dump_window(self, rows=64, cols=32):
        """
        Dense dump of the window [0, rows) x [0, cols).

        Returns
        -------
        ndarray
            Integer array with -1 for empty cells.

        """
        window = np.full((rows, cols), -1, dtype=np.int64)
        for row, cells in self.rows.items():
            if row < rows:
                for col, val in cells.items():
                    if col < cols:
                        window[row, col] = val
        return window

    def digest(self):
        """sha256 hex digest of the canonical cell listing."""
        sha = hashlib.sha256(self.name.encode())
        for row, col, val in self.cells():
            sha.update(b'%i %i %i;' % (row, col, val))
        return sha.hexdigest()


class InvalidationSet:
    """
    Monotone set K of invalidated rows (game G1).

    """
    def __init__(self, rows=()):
        self.rows = set()
        for row in rows:
            self.add(row)

    def __repr__(self):
        return "<InvalidationSet | rows: %i>" % len(self.rows)

    def __contains__(self, row):
        return row in self.rows

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(sorted(self.rows))

    def __eq__(self, other):
        return isinstance(other, InvalidationSet) and self.rows == other.rows

    def add(self, row):
        """Invalidate a row; returns True if it was valid before."""
        if row in self.rows:
            return False
        self.rows.add(row)
        return True

    def issubset(self, other):
        return self.rows <= other.rows


def set_cell(table, row, col, val):
    """
    Write a cell into a table in place and return the table.

    Raises
    ------
    ConflictingWrite
        If the cell already holds a different value.

    """
    table.set_cell(row, col, val)
    return table


def is_odd_row(table, row):
    """True iff the number of filled cells in the row is odd."""
    return table.support_size(row) % 2 == 1


def prefix_equal(table, i, j, k):
    """
    Compare the first k positions of rows i and j.

    Two positions agree when both are empty or both hold the same value.

    """
    if i == j:
        return True
    row_i, row_j = table.row_cells(i), table.row_cells(j)
    for col, val in row_i.items():
        if col < k and row_j.get(col) != val:
            return False
    for col in row_j:
        if col < k and col not in row_i:
            return False
    return True


def prefix_constant(table, i, k):
    """
    True iff columns 0..k-1 of row i are all filled with one value (vacuous for k = 0).

    """
    cells = table.row_cells(i)
    if k == 0:
        return True
    first = cells.get(0)
    if first is None:
        return False
    return all(cells.get(col) == first for col in range(1, k))
