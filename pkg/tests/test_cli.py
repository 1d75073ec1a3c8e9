"""
--- Friedberg ---
Tests the friedberg command line interface and its run configuration.
"""
from friedberg.cli.friedberg_run import main
from friedberg.cli.config import RunConfig, parse_window
from friedberg.exceptions import BadParameters
import os
import pytest


test_dir = os.path.abspath(os.path.dirname(__file__))
dup = os.path.join(test_dir, 'dup.adv')
g0_config = os.path.join(test_dir, 'g0.yaml')


def test_catalog(capsys):
    """Tests that the catalog lists the seven games."""
    assert main(['catalog']) == 0
    out = capsys.readouterr().out
    assert out.count('conditions | parameters') == 7
    assert 'ext: 2 conditions | parameters: beta (required)' in out
    assert 'g4: 3 conditions | parameters: tables (optional)' in out


def test_parse_window():
    """Tests the ROWSxCOLS window format."""
    assert parse_window('64x16') == (64, 16)
    for text in ('64', '0x4', 'ax3'):
        with pytest.raises(BadParameters):
            parse_window(text)


def test_run_config_file():
    """Tests reading a config file over the packaged defaults."""
    config = RunConfig(read=g0_config, stages=12)
    assert config['game'] == 'g0'
    assert config['adversary'] == 'scripted:' + dup
    assert config['stages'] == 12
    assert config['mode'] == 'both'
    assert config.window == (64, 16)
    kind, adversary = config.validate()
    assert kind.name == 'g0'
    assert adversary.spec() == 'scripted:dup'


def test_run_config_defaults():
    """Tests the packaged defaults without a config file."""
    config = RunConfig()
    assert config['game'] == 'g0'
    assert set(config['params'].values()) == {None}
    kind, adversary = config.validate()
    assert kind.name == 'g0'
    assert RunConfig(game='g1', stages=5)['stages'] == 5


def test_run_config_errors():
    """Tests rejected configurations."""
    with pytest.raises(BadParameters):
        RunConfig(colour='blue')
    for options in ({'stages': 0}, {'mode': 'oracle'}, {'game': 'g9'}, {'game': 'ext'},
                    {'game': 'g0', 'params': {'fill': 'identity'}}):
        with pytest.raises(BadParameters):
            RunConfig(**options).validate()


def test_ext_without_beta():
    """Tests that ext without a class B is a configuration error."""
    assert main(['run', '--game', 'ext', '--stages', '5']) == 2


def test_bad_window():
    """Tests that a malformed window is a configuration error."""
    assert main(['run', '--window', '64by16', '--stages', '3']) == 2
    assert main(['verify', 'missing.trace', '--window', '0x0']) == 2


def test_run_and_verify():
    """Tests a run writing a trace and its verification."""
    trace_file = os.path.join(test_dir, 'cli_dup.trace')
    report_file = os.path.join(test_dir, 'cli_dup.report')
    assert main(['run', '--config', g0_config, '--trace', trace_file, '--report', report_file]) == 0
    assert main(['verify', trace_file, '--window', '64x16']) == 0
    with open(report_file, 'r') as f:
        report = f.read()
    os.remove(report_file)
    assert 'COND g0 1 HOLDS' in report
    assert 'COND g0 2 HOLDS' in report
    with open(trace_file, 'r') as f:
        lines = f.read().splitlines()
    lines[lines.index('A 0 0 7')] = 'A 0 0 8'
    with open(trace_file, 'w') as f:
        f.write('\n'.join(lines) + '\n')
    assert main(['verify', trace_file]) == 1
    os.remove(trace_file)


def test_verify_rederives_bob(tmpdir):
    """Tests that verification rejects Bob records the strategy would not produce."""
    trace_file = str(tmpdir.join('rederive.trace'))
    assert main(['run', '--config', g0_config, '--trace', trace_file]) == 0
    with open(trace_file, 'r') as f:
        lines = f.read().splitlines()
    provenance = [i for i, line in enumerate(lines) if line.startswith('P ')]
    cursor = [i for i, line in enumerate(lines) if line.startswith('E B odd ')][0]
    write = [i for i, line in enumerate(lines) if line.startswith('B ') and len(line.split()) == 5][0]
    corrupted = [lines[:provenance[0]] + lines[provenance[0] + 1:],
                 lines[:cursor] + ['E B odd %i' % (int(lines[cursor].split()[3]) + 3)] + lines[cursor + 1:],
                 lines[:write] + [lines[write] + 'x'] + lines[write + 1:]]
    for changed in corrupted:
        with open(trace_file, 'w') as f:
            f.write('\n'.join(changed) + '\n')
        assert main(['verify', trace_file, '--window', '64x16']) == 1


def test_verify_missing_and_empty_traces():
    """Tests verification of a missing file and of an empty trace."""
    assert main(['verify', os.path.join(test_dir, 'missing.trace')]) == 2
    empty = os.path.join(test_dir, 'cli_empty.trace')
    open(empty, 'w').close()
    assert main(['verify', empty]) == 0
    os.remove(empty)


def test_run_command_line_options(capsys):
    """Tests a run configured from options only."""
    assert main(['run', '--game', 'g4', '--tables', '2', '--adversary', 'random:4', '--stages', '20',
                 '--window', '16x8', '--mode', 'incremental']) == 0
    out = capsys.readouterr().out
    assert '# referee incremental | mode symbolic | stage 20 | check incremental' in out
    assert 'COND g4 3 HOLDS * vacuous' in out
