"""
--- Friedberg ---
Tests writing trace files, reading them back and replaying them.
"""
from friedberg import Transcript, run_game
from friedberg.adversaries import read_script, RandomAdversary
from friedberg.protocol import parse_trace, parse_kind
from friedberg.exceptions import TraceFormatError, ConflictingWrite
import os
import pytest


test_dir = os.path.abspath(os.path.dirname(__file__))
dup = os.path.join(test_dir, 'dup.adv')


def write_lines(name, lines):
    filename = os.path.join(test_dir, name)
    with open(filename, 'w') as trace_file:
        trace_file.write(''.join(line + '\n' for line in lines))
    return filename


def test_trace_write_read():
    """Tests that a read trace reproduces the run's records and end-of-run records."""
    transcript = run_game('g0', read_script(dup), stages=20, seed=1)
    trace_file = os.path.join(test_dir, 'dup_test.trace')
    transcript.write(trace_file)
    read = Transcript(read=trace_file)
    os.remove(trace_file)
    assert read.kind == transcript.kind
    assert (read.seed, read.stages, read.adversary) == (1, 20, 'scripted:dup')
    assert read.records == transcript.records
    assert read.provenance == transcript.provenance
    assert read.cursors == transcript.cursors
    assert read.fired == transcript.fired
    assert read.limits == transcript.limits
    assert read.digest == transcript.digest
    assert read.replay_matches()
    assert read.text() == transcript.text()


def test_trace_text_is_deterministic():
    """Tests byte-identical traces for equal seeds."""
    kind = parse_kind('g4', {'tables': '3'})
    first = run_game(kind, RandomAdversary(5), stages=25, seed=5).text()
    second = run_game(kind, RandomAdversary(5), stages=25, seed=5).text()
    assert first == second
    assert first.splitlines()[0] == 'H g4 5 25 tables=3 adversary=random:5'


def test_trace_records_actors():
    """Tests that every Bob write carries its actor label and held cells are never copied."""
    text = run_game('g0', read_script(dup), stages=5).text()
    writes = [line.split() for line in text.splitlines() if line.startswith('B ')]
    assert writes
    assert all(len(words) == 5 for words in writes)
    assert not [words for words in writes if words[2:4] == ['0', '7']]


def test_corrupted_trace_fails_replay():
    """Tests that a changed cell no longer reproduces the digest."""
    lines = run_game('g0', read_script(dup), stages=10).text().splitlines()
    index = lines.index('A 0 0 7')
    lines[index] = 'A 0 0 8'
    trace_file = write_lines('corrupted.trace', lines)
    read = Transcript(read=trace_file)
    os.remove(trace_file)
    assert not read.replay_matches()


def test_trace_with_duty_violation():
    """Tests that replaying a trace overwriting a cell raises."""
    trace_file = write_lines('duty.trace', ['H g0 0 2', 'S 0', 'A 0 0 1', 'S 1', 'A 0 0 2'])
    with pytest.raises(ConflictingWrite):
        Transcript(read=trace_file)
    os.remove(trace_file)


def test_empty_trace():
    """Tests that an empty file reads as an empty g0 run."""
    trace_file = write_lines('empty.trace', [])
    read = Transcript(read=trace_file)
    os.remove(trace_file)
    assert read.kind.name == 'g0'
    assert len(read) == 0
    assert read.replay_matches()


@pytest.mark.parametrize('lines', [
    ['S 0'],
    ['H g0 0 5', 'S 1'],
    ['H g0 0 5', 'S 0', 'X 1'],
    ['H g9 0 5'],
    ['H ext 0 5'],
    ['H g0 0 5', 'S 0', 'A 0 -1 3'],
    ['H g0 0 5', 'A 0 0 3'],
    ['H g0 0 5', 'H g0 0 5'],
    ['H g0 0 5', 'D'],
])
def test_bad_trace(lines):
    """Tests malformed trace text."""
    with pytest.raises(TraceFormatError):
        parse_trace(lines)
