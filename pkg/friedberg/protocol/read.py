"""
--- Friedberg ---
Read trace files.
"""
from friedberg.exceptions import TraceFormatError, FriedbergError
from friedberg.strategies.enumeration import parse_enumeration
from friedberg.strategies.numbering import FillFunction
from friedberg.referee.provenance import RowProvenance, EnumeratorCursor
from friedberg.adversaries.limits import LimitDecl, DeclaredLimits
from .moves import GameKind, AliceMove, BobMove


def parse_kind(name, params=None):
    """
    Game kind from its name and canonical parameter text.

    Parameters
    ----------
    name : str
        Game name.
    params : dict or None
        {'beta': enumeration spec, 'fill': fill spec, 'tables': int text}.

    Returns
    -------
    GameKind
        Validated game kind (BadParameters otherwise).

    """
    params = {} if params is None else params
    beta = parse_enumeration(params['beta']) if params.get('beta') else None
    fill = FillFunction.parse(params['fill']) if params.get('fill') else None
    tables = int(params['tables']) if params.get('tables') not in (None, '') else None
    return GameKind(name, beta=beta, fill=fill, tables=tables)


def _ints(words, number, line_number):
    try:
        values = [int(w) for w in words[:number]]
    except ValueError:
        values = []
    if len(values) != number or min(values) < 0:
        raise TraceFormatError('Line %i: expected %i naturals, got %r' % (line_number, number, ' '.join(words)))
    return values


def parse_trace(lines):
    """
    Parse trace text.

    Parameters
    ----------
    lines : list
        Lines of a trace file.

    Returns
    -------
    dict
        Trace dictionary with 'kind', 'seed', 'stages', 'adversary', 'records',
        'limits', 'provenance', 'cursors', 'fired' and 'digest' keys.

    """
    trace = {'kind': None, 'seed': 0, 'stages': 0, 'adversary': '', 'records': [], 'provenance': [],
             'cursors': [], 'fired': {}, 'digest': None}
    declarations = {'A': {}, 'R': {}}
    defaults = {}
    current = None
    for number, line in enumerate(lines, start=1):
        words = line.split()
        if not words:
            continue
        tag, rest = words[0], words[1:]
        if tag == 'H':
            if trace['kind'] is not None or len(rest) < 3:
                raise TraceFormatError('Line %i: bad header' % number)
            params = dict(w.split('=', 1) for w in rest[3:] if '=' in w)
            trace['adversary'] = params.pop('adversary', '')
            try:
                trace['kind'] = parse_kind(rest[0], params)
            except FriedbergError as error:
                raise TraceFormatError('Line %i: %s' % (number, error))
            trace['seed'], trace['stages'] = _ints(rest[1:3], 2, number)
            continue
        if trace['kind'] is None:
            raise TraceFormatError('Line %i: record before the header' % number)
        if tag == 'S':
            stage = _ints(rest, 1, number)[0]
            if stage != len(trace['records']):
                raise TraceFormatError('Line %i: stage %i out of order' % (number, stage))
            current = (stage, AliceMove(), BobMove())
            trace['records'].append(current)
        elif tag in ('A', 'R', 'K') or tag == 'C' or tag.startswith('B'):
            if current is None:
                raise TraceFormatError('Line %i: write outside a stage' % number)
            _, alice_move, bob_move = current
            if tag == 'K':
                bob_move.k_delta.append(_ints(rest, 1, number)[0])
            elif tag == 'A':
                alice_move.a_delta.append(tuple(_ints(rest, 3, number)))
            elif tag == 'R':
                alice_move.r_delta.append(tuple(_ints(rest, 3, number)))
            else:
                row, col, val = _ints(rest, 3, number)
                bob_move.add(tag, row, col, val, rest[3] if len(rest) > 3 else '')
        elif tag == 'L':
            if len(rest) < 3 or rest[0] not in declarations:
                raise TraceFormatError('Line %i: bad limit record' % number)
            decl = LimitDecl.parse(rest[2], rest[3] if len(rest) > 3 else '')
            if rest[1] == '*':
                defaults[rest[0]] = decl
            else:
                declarations[rest[0]][_ints(rest[1:2], 1, number)[0]] = decl
        elif tag == 'P':
            trace['provenance'].append(RowProvenance.parse(rest))
        elif tag == 'E':
            trace['cursors'].append(EnumeratorCursor.parse(rest))
        elif tag == 'F':
            if len(rest) != 2:
                raise TraceFormatError('Line %i: bad fired record' % number)
            trace['fired'][rest[0]] = _ints(rest[1:], 1, number)[0]
        elif tag == 'D':
            if len(rest) != 1:
                raise TraceFormatError('Line %i: bad digest record' % number)
            trace['digest'] = rest[0]
        else:
            raise TraceFormatError('Line %i: unknown record %r' % (number, tag))
    trace['limits'] = {t: DeclaredLimits(declarations[t], defaults.get(t)) for t in declarations}
    return trace


def read_trace(filename):
    """
    Read trace file and return it as a dictionary (see parse_trace).

    """
    with open(filename, 'r') as trace_file:
        return parse_trace(trace_file.readlines())
