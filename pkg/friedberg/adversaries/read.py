"""
--- Friedberg ---
Read adversary scripts, program pools and adversary specs.
"""
import os
from friedberg.exceptions import TraceFormatError, BadParameters
from .limits import LimitDecl
from .machine import ToyProgram, parse_instruction
from .adversary import Adversary, ScriptedAdversary, EnumerationAdversary, RandomAdversary, FrozenAdversary


def _content_lines(lines):
    """Strip comments and blank lines, keeping line numbers."""
    for number, line in enumerate(lines, start=1):
        line = line.split('#')[0].strip()
        if line:
            yield number, line


def parse_script(lines, name='script'):
    """
    Parse an adversary script.

    Parameters
    ----------
    lines : list
        Script lines: header 'adversary scripted', 'W <stage> <table> <row> <col> <val>'
        and 'L [A|R] <row> finite|const|pattern <form>' records.
    name : str
        Script name.

    Returns
    -------
    ScriptedAdversary
        Scripted adversary.

    """
    content = list(_content_lines(lines))
    if not content or content[0][1].split() != ['adversary', 'scripted']:
        raise TraceFormatError('Script %s must start with "adversary scripted"' % name)
    writes, limits = [], {'A': {}, 'R': {}}
    for number, line in content[1:]:
        words = line.split()
        try:
            if words[0] == 'W':
                stage, table, row, col, val = int(words[1]), words[2], int(words[3]), int(words[4]), int(words[5])
                writes.append((stage, table, row, col, val))
            elif words[0] == 'L':
                table = 'A'
                if words[1] in ('A', 'R'):
                    table, words = words[1], words[1:]
                form = words[3] if len(words) > 3 else ''
                limits[table][int(words[1])] = LimitDecl.parse(words[2], form)
            else:
                raise TraceFormatError('Unknown script record %r (line %i)' % (words[0], number))
        except (IndexError, ValueError):
            raise TraceFormatError('Bad script line %i: %r' % (number, line))
    return ScriptedAdversary(writes, limits, name=name)


def read_script(filename):
    """Read an adversary script file."""
    with open(filename, 'r') as script_file:
        lines = script_file.readlines()
    return parse_script(lines, name=os.path.splitext(os.path.basename(filename))[0])


def parse_pool(lines):
    """
    Parse a program pool.

    Each program starts with 'program <n> [limit <kind> <form>]' followed by
    its instructions.

    Returns
    -------
    list
        ToyProgram objects ordered by number.

    """
    programs, current = [], None
    for number, line in _content_lines(lines):
        words = line.split()
        if words[0] == 'program':
            try:
                limit = None
                if len(words) > 2:
                    if words[2] != 'limit':
                        raise ValueError(words[2])
                    limit = LimitDecl.parse(words[3], words[4] if len(words) > 4 else '')
                current = ToyProgram([], number=int(words[1]), limit=limit)
            except (IndexError, ValueError):
                raise TraceFormatError('Bad program header at line %i: %r' % (number, line))
            programs.append(current)
        elif current is None:
            raise TraceFormatError('Instruction outside a program at line %i' % number)
        else:
            current.instructions.append(parse_instruction(line))
    programs.sort(key=lambda p: p.number)
    if [p.number for p in programs] != list(range(len(programs))):
        raise TraceFormatError('Programs must be numbered 0..%i' % (len(programs) - 1))
    return programs


def read_pool(filename):
    """Read a program pool file."""
    with open(filename, 'r') as pool_file:
        return parse_pool(pool_file.readlines())


def make_adversary(spec, step_scale=1):
    """
    Build an adversary from its spec.

    Parameters
    ----------
    spec : str
        silent | scripted:<path> | enumeration:<path> | random:<seed> | frozen:<stage>:<spec>.
    step_scale : int
        Step budget per stage of enumeration adversaries.

    """
    kind, _, rest = spec.partition(':')
    if kind == 'silent':
        return Adversary()
    if kind == 'scripted':
        return read_script(rest)
    if kind == 'enumeration':
        return EnumerationAdversary(read_pool(rest), step_scale=step_scale,
                                    name=os.path.splitext(os.path.basename(rest))[0])
    if kind == 'random':
        try:
            return RandomAdversary(seed=int(rest or 0))
        except ValueError:
            raise BadParameters('Bad random adversary seed: %r' % rest)
    if kind == 'frozen':
        stage, _, base = rest.partition(':')
        try:
            return FrozenAdversary(make_adversary(base, step_scale), int(stage))
        except ValueError:
            raise BadParameters('Bad freeze stage: %r' % stage)
    raise BadParameters('Unknown adversary spec: %r' % spec)
