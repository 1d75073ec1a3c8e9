"""
--- Friedberg ---
Functions for writing trace files.
"""


def write_header(fileobj, kind, seed, stages, adversary=''):
    """
    Write the trace header: kind, seed, stage bound and key=value parameters.

    """
    words = ['H', kind.name, str(seed), str(stages)]
    words += ['%s=%s' % kv for kv in sorted(kind.params().items())]
    if adversary:
        words.append('adversary=%s' % adversary)
    fileobj.write(' '.join(words) + '\n')


def write_stage(fileobj, stage, alice_move, bob_move):
    """
    Write the records of one stage: Alice's writes first, then Bob's.

    Parameters
    ----------
    fileobj : file object
        Trace file object.
    stage : int
        Stage number.
    alice_move : AliceMove
        Alice's move of the stage.
    bob_move : BobMove
        Bob's move of the stage; actor labels are written as a trailing field.

    Returns
    -------
    None
        Writes 'S', 'A', 'R', 'B', 'C' and 'K' records.

    """
    fileobj.write('S %i\n' % stage)
    for row, col, val in alice_move.a_delta:
        fileobj.write('A %i %i %i\n' % (row, col, val))
    for row, col, val in alice_move.r_delta:
        fileobj.write('R %i %i %i\n' % (row, col, val))
    for table_id in sorted(bob_move.deltas, key=table_order):
        for row, col, val, actor in bob_move.deltas[table_id]:
            line = '%s %i %i %i' % (table_id, row, col, val)
            fileobj.write(line + (' %s\n' % actor if actor else '\n'))
    for row in bob_move.k_delta:
        fileobj.write('K %i\n' % row)


def table_order(table_id):
    """B, C, then B0, B1, ... in numeric order."""
    if table_id[1:].isdigit():
        return 1, int(table_id[1:])
    return 0, table_id


def write_limits(fileobj, table, limits):
    """Write 'L' records of the declared limits of one of Alice's tables."""
    for row, decl in limits.items():
        fileobj.write('L %s %i %s\n' % (table, row, decl.canonical()))
    fileobj.write('L %s * %s\n' % (table, limits.default.canonical()))


def write_end(fileobj, transcript):
    """
    Write the end-of-run records: limits, provenance, cursors, fired instructions and the digest.

    """
    for table in sorted(transcript.limits):
        write_limits(fileobj, table, transcript.limits[table])
    for record in transcript.provenance:
        fileobj.write('P %s\n' % record.canonical())
    for cursor in transcript.cursors:
        fileobj.write('E %s\n' % cursor.canonical())
    for label, stage in sorted(transcript.fired.items()):
        fileobj.write('F %s %i\n' % (label, stage))
    if transcript.digest is not None:
        fileobj.write('D %s\n' % transcript.digest)


def write_trace(fileobj, transcript):
    """
    Write a whole transcript to a file object.

    """
    write_header(fileobj, transcript.kind, transcript.seed, transcript.stages, transcript.adversary)
    for stage, alice_move, bob_move in transcript.records:
        write_stage(fileobj, stage, alice_move, bob_move)
    write_end(fileobj, transcript)
    fileobj.flush()
