"""
--- Friedberg ---
Bob's assistants: mirror assistants, constant assistants, the odd enumerator and the copier.
"""
from friedberg.tables import FiniteFun, prefix_equal, prefix_constant


ROLES = ('mirror', 'constant', 'odd_enumerator', 'pp65_copier')


class AssistantState:
    """
    One assistant: role, reservations per table and invalidation count.

    """
    def __init__(self, role, index=0, active_since=0, table=None):
        """
        Create an assistant.

        Parameters
        ----------
        role : str
            mirror | constant | odd_enumerator | pp65_copier.
        index : int
            Mirrored A-row (mirror) or constant value (constant).
        active_since : int
            First stage the assistant acts.
        table : str or None
            Home table of mirror assistants and enumerators.

        """
        self.role = role
        self.index = index
        self.active_since = active_since
        self.table = table
        self.reserved = {}
        self.invalid_count = 0
        self.cursor = 0

    def __repr__(self):
        return "<AssistantState %s | reserved: %s | k: %i>" % (self.label, self.reserved, self.invalid_count)

    @property
    def label(self):
        """Actor label used in traces and event logs."""
        if self.role == 'mirror':
            return 'main:%i' % self.index
        if self.role == 'constant':
            return 'const:%i' % self.index
        if self.role == 'odd_enumerator':
            return 'enum'
        return 'copy'

    def is_active(self, stage):
        return stage >= self.active_since


def duplicates_earlier_row(view, i, k):
    """True iff the first k positions of view row i equal those of some row j < i."""
    return any(prefix_equal(view, i, j, k) for j in range(i))


def g1_assistant_step(assistant, board, view, invalidate, constant_rule=False, before_check=None):
    """
    One step of a mirror assistant.

    Parameters
    ----------
    assistant : AssistantState
        Mirror assistant of A-row assistant.index.
    board : Board
        Her output board.
    view : FiniteTable
        Bob's view of A (the filtered view, or A itself).
    invalidate : callable
        invalidate(assistant, board) removes her reserved row from play
        (K-invalidation, odd-ification or B-ification).
    constant_rule : bool
        Also invalidate when the first k visible positions of her row are constant.
    before_check : callable or None
        Extra instruction run after the reservation and before the checks.

    Returns
    -------
    list
        Actions taken ('reserve', 'invalidate', 'copy').

    """
    actions = []
    i = assistant.index
    if board.table_id not in assistant.reserved:
        board.reserve_fresh_row(assistant)
        actions.append('reserve')
    if before_check is not None and before_check(assistant, board):
        actions.append('instruction')
    k = assistant.invalid_count
    if duplicates_earlier_row(view, i, k) or (constant_rule and prefix_constant(view, i, k)):
        invalidate(assistant, board)
        assistant.invalid_count += 1
        actions.append('invalidate')
    row = assistant.reserved.get(board.table_id)
    if row is not None:
        for col, val in sorted(view.row_cells(i).items()):
            board.write(row, col, val, assistant.label)
        actions.append('copy')
    return actions


def constant_assistant_step(assistant, boards, instruction=None):
    """
    One step of the constant assistant for m = assistant.index.

    She keeps one reserved row in every board she serves and extends each by
    one cell holding m; rows lost to an instruction are re-reserved and rebuilt.

    """
    for board in boards:
        if board.table_id not in assistant.reserved:
            board.reserve_fresh_row(assistant)
    if instruction is not None:
        instruction(assistant)
    for board in boards:
        if board.table_id not in assistant.reserved:
            board.reserve_fresh_row(assistant)
        board.extend_constant(assistant)


def odd_enumerator_step(assistant, board, enumeration, kind='odd'):
    """
    One emission attempt of the exhaustion assistant.

    The next member of the enumeration is placed into a fresh row unless the
    board already committed it.

    Returns
    -------
    int or None
        Row written, or None when the member was skipped or the enumeration is exhausted.

    """
    fun = enumeration.member(assistant.cursor)
    if fun is None:
        return None
    assistant.cursor += 1
    if fun in board.registry:
        board.log(assistant.label, 'skip', -1)
        return None
    return board.place(assistant, fun, kind)


def pp65_copier_step(assistant, board, A):
    """
    Copy the first odd A-row whose content is not committed yet into a fresh row and release it.

    Returns
    -------
    int or None
        Row written, or None when every odd A-row is already present.

    """
    for a_row in A.row_ids():
        cells = A.row_cells(a_row)
        if len(cells) % 2 == 1:
            fun = FiniteFun(cells)
            if fun not in board.registry:
                return board.place(assistant, fun, 'released')
    return None
