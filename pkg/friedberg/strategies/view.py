"""
--- Friedberg ---
Bob's filtered view of the A-table: one cell of every odd A-row is held back.
"""
from friedberg.tables import FiniteTable


class HeldCells:
    """
    Cells of A currently ignored by Bob, kept together with the filtered view.

    Whenever an A-row grows its held cell is released; if the new support size
    is odd, the newly added cell with the largest column is held instead.

    """
    def __init__(self):
        self.held = {}
        self.sizes = {}
        self.view = FiniteTable('view')

    def __repr__(self):
        return "<HeldCells rows: %i>" % len(self.held)

    def __getitem__(self, row):
        return self.held.get(row)

    def __contains__(self, row):
        return row in self.held

    def update(self, A):
        """
        Bring the view up to date with the accumulated A-table.

        Returns
        -------
        list
            A-rows whose visible content changed.

        """
        changed = []
        for row, cells in A.rows.items():
            if self.sizes.get(row, 0) == len(cells):
                continue
            self.sizes[row] = len(cells)
            released = self.held.pop(row, None)
            if released is not None:
                self.view.set_cell(row, *released)
            visible = self.view.row_cells(row)
            new_cells = sorted((c, v) for c, v in cells.items() if c not in visible)
            if len(cells) % 2 == 1:
                self.held[row] = new_cells.pop()
            for col, val in new_cells:
                self.view.set_cell(row, col, val)
            changed.append(row)
        return changed

    def check(self, A):
        """
        Invariant problems of the held cells against A (empty list when sound).

        """
        problems = []
        for row, cells in A.rows.items():
            held = self.held.get(row)
            if (len(cells) % 2 == 1) != (held is not None):
                problems.append('A-row %i has %i cells but held cell %s' % (row, len(cells), held))
            elif held is not None and cells.get(held[0]) != held[1]:
                problems.append('Held cell %s is not a cell of A-row %i' % (held, row))
        for row, cells in self.view.rows.items():
            if len(cells) % 2 == 1:
                problems.append('View row %i has odd support %i' % (row, len(cells)))
        return problems


def filtered_view(A, held):
    """
    A-table minus the held cells.

    Parameters
    ----------
    A : FiniteTable
        Accumulated A-table.
    held : HeldCells or dict
        Held cell per A-row.

    Returns
    -------
    FiniteTable
        Table whose rows all have even support.

    """
    held = held.held if isinstance(held, HeldCells) else held
    view = FiniteTable('view')
    for row, col, val in A.cells():
        if held.get(row) != (col, val):
            view.set_cell(row, col, val)
    return view
