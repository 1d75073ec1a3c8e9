"""
--- Friedberg ---
Command line interface: run, verify and list games.
"""
import sys
import logging
import argparse
import multiprocessing
import numpy as np
from friedberg.exceptions import (FriedbergError, BadParameters, TraceFormatError, InconsistentScript,
                                  ConflictingWrite, OutOfTurn, ShapeMismatch)
from friedberg.protocol import KINDS, CONDITIONS, Transcript, run_game
from friedberg.protocol.moves import PARAMETERS, REQUIRED
from friedberg.referee import Referee, brute_force_referee, reports_agree, report_differences
from .config import RunConfig, parse_window


EXIT_OK, EXIT_VIOLATED, EXIT_CONFIG, EXIT_DUTY = 0, 1, 2, 3

CONFIG_ERRORS = (BadParameters, TraceFormatError, InconsistentScript, OSError)
DUTY_ERRORS = (ConflictingWrite, OutOfTurn, ShapeMismatch)


def exit_code(error):
    """Exit status of an exception raised by a run or a replay."""
    if isinstance(error, CONFIG_ERRORS):
        return EXIT_CONFIG
    return EXIT_DUTY


def dump_tables(state, window):
    """Print a dense dump (-1 = empty) of every table within the window."""
    rows, cols = window
    with np.printoptions(threshold=rows * cols, linewidth=200):
        for table_id, table in sorted(state.tables.items()):
            print('%s (%ix%i window):' % (table_id, rows, cols))
            print(table.dump_window(rows, cols))
        if state.K is not None:
            print('K: %s' % ' '.join(str(r) for r in state.K))


def referee_transcript(transcript, window, hypothesis, mode, referee=None):
    """
    Referee a transcript, cross-checking with the brute-force oracle in mode 'both'.

    Returns
    -------
    tuple
        (RefereeReport, exit status).

    """
    referee = Referee(window, hypothesis) if referee is None else referee
    report = referee.report(transcript)
    report.check = mode
    status = EXIT_OK if report.ok else EXIT_VIOLATED
    if mode == 'both':
        oracle = brute_force_referee(transcript, window, hypothesis)
        if not reports_agree(report, oracle):
            for key in report_differences(report, oracle):
                print('Referees disagree on condition %s subject %s (%s)' % key)
            status = EXIT_VIOLATED
    return report, status


def cmd_run(config):
    """
    Execute one configured run, write its trace and print its report.

    Parameters
    ----------
    config : RunConfig
        Run configuration.

    Returns
    -------
    int
        Exit status: 0 ok, 1 violated or disagreement, 2 config error, 3 duty violation.

    """
    try:
        kind, adversary = config.validate()
    except (FriedbergError, OSError) as error:
        print('Configuration error: %s' % error)
        return EXIT_CONFIG
    window, hypothesis = config.window, config.hypothesis
    referee = Referee(window, hypothesis)
    print('Running %s against %s for %i stages (seed %i)' % (kind.name, adversary.spec(), config['stages'],
                                                             config['seed']))
    try:
        transcript = run_game(kind, adversary, stages=int(config['stages']), seed=int(config['seed']),
                              referee=referee)
    except FriedbergError as error:
        print('Run aborted: %s' % error)
        return exit_code(error)
    if config['trace']:
        transcript.write(config['trace'])
        print('Trace written -> %s' % config['trace'])
    report, status = referee_transcript(transcript, window, hypothesis, config['mode'], referee)
    print(report.text(), end='')
    if config['report']:
        report.write(config['report'])
        print('Report written -> %s' % config['report'])
    if config['dump_window']:
        dump_tables(transcript.state, window)
    return status


def cmd_verify(trace, window=(64, 32), hypothesis=(3, 100), report_file='', dump_window=False):
    """
    Replay a trace, compare its digest, re-derive Bob's side and cross-check both referees.

    Returns
    -------
    int
        0 on full agreement without violation, 1 on mismatch or violation,
        2 for an unreadable trace, 3 for a duty violation during replay.

    """
    print('Reading trace file -> %s' % trace)
    try:
        transcript = Transcript(read=trace)
    except (FriedbergError, OSError) as error:
        print('Replay failed: %s' % error)
        return exit_code(error)
    if not transcript.replay_matches():
        print('Replay mismatch: tables do not reproduce the recorded digest')
        return EXIT_VIOLATED
    try:
        differences = transcript.rederive()
    except FriedbergError as error:
        print('Re-derivation failed: %s' % error)
        return exit_code(error)
    if differences:
        print('Re-derivation mismatch: %s' % '; '.join(differences))
        return EXIT_VIOLATED
    report, status = referee_transcript(transcript, window, hypothesis, 'both')
    print(report.text(), end='')
    if report_file:
        report.write(report_file)
    if dump_window:
        dump_tables(transcript.state, window)
    return status


def cmd_catalog():
    """
    Print the supported games, their winner conditions and parameters.

    """
    lines = []
    for name in KINDS:
        required = [p for p in PARAMETERS[name] if p in REQUIRED.get(name, ())]
        optional = [p for p in PARAMETERS[name] if p not in required]
        params = ['%s (required)' % p for p in required] + ['%s (optional)' % p for p in optional]
        lines.append('%s: %i conditions | parameters: %s' % (name, len(CONDITIONS[name]),
                                                            ', '.join(params) if params else 'none'))
        for index, condition in enumerate(CONDITIONS[name], start=1):
            lines.append('    %i. %s' % (index, condition))
    print('\n'.join(lines))
    return EXIT_OK


def run_config_file(config_file):
    """Run one config file (used by the --jobs pool)."""
    try:
        config = RunConfig(read=config_file)
    except (FriedbergError, OSError) as error:
        print('Configuration error in %s: %s' % (config_file, error))
        return EXIT_CONFIG
    return cmd_run(config)


def build_parser():
    parser = argparse.ArgumentParser(
        prog='friedberg',
        description="""
    =================================================
       Alice  ---- Friedberg ----  Bob
       A_s  >  B_s  >  A_s+1  >  B_s+1  >  ...
    =================================================
    Stage-based game simulator with refereed winning strategies
    =================================================
        """,
        epilog="""
    Example:
    > friedberg run --game g0 --adversary scripted:dup.adv --stages 200 --seed 1 --trace dup.trace
    > friedberg verify dup.trace
    > friedberg catalog
        """,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    commands = parser.add_subparsers(dest='command')

    run = commands.add_parser('run', help='Play a game and referee it')
    run.add_argument('--config', '-conf', default=[], type=str, metavar='', action='append',
                     help="Read config yaml file (repeat with --jobs for a batch)")
    run.add_argument('--game', '-g', default=None, type=str, metavar='',
                     help="Game kind (g0 | g1 | g2 | g3 | g4 | ext | pp65)")
    run.add_argument('--adversary', '-a', default=None, type=str, metavar='',
                     help="Adversary spec (silent | scripted:PATH | enumeration:PATH | random:SEED | frozen:STAGE:SPEC)")
    run.add_argument('--stages', '-s', default=None, type=int, metavar='',
                     help="Stage bound (default: 100)")
    run.add_argument('--seed', default=None, type=int, metavar='',
                     help="Run seed (default: 0)")
    run.add_argument('--window', '-w', default=None, type=str, metavar='',
                     help="Referee window ROWSxCOLS (default: 64x32)")
    run.add_argument('--trace', '-t', default=None, type=str, metavar='',
                     help="Trace file to write")
    run.add_argument('--report', '-r', default=None, type=str, metavar='',
                     help="Report file to write")
    run.add_argument('--jobs', '-j', default=1, type=int, metavar='',
                     help="Run the --config files in N parallel processes (default: 1)")
    run.add_argument('--mode', '-m', default=None, type=str, metavar='',
                     help="Referee mode (incremental | [both])")
    run.add_argument('--tables', default=None, type=int, metavar='',
                     help="Cap on the number of B tables (g4 only)")
    run.add_argument('--beta', default=None, type=str, metavar='',
                     help="Class B enumeration (ext only): odd | list:FUN;FUN;...")
    run.add_argument('--fill', default=None, type=str, metavar='',
                     help="Fill function (pp65 only): identity | linear:SLOPE,INTERCEPT,MODULUS,RESIDUE")
    run.add_argument('--dump-window', action='store_true', default=None,
                     help="Print every table within the window")
    run.add_argument('--verbose', '-v', action='store_true', default=False,
                     help="Verbosity (default: False)")

    verify = commands.add_parser('verify', help='Replay a trace and cross-check both referees')
    verify.add_argument('trace', type=str, help='Trace file to verify')
    verify.add_argument('--window', '-w', default='64x32', type=str, metavar='',
                        help="Referee window ROWSxCOLS (default: 64x32)")
    verify.add_argument('--hypothesis', default=[3, 100], type=int, metavar='', nargs=2,
                        help="Extension hypothesis proxy N M (default: 3 100)")
    verify.add_argument('--report', '-r', default='', type=str, metavar='',
                        help="Report file to write")
    verify.add_argument('--dump-window', action='store_true', default=False,
                        help="Print every table within the window")
    verify.add_argument('--verbose', '-v', action='store_true', default=False,
                        help="Verbosity (default: False)")

    commands.add_parser('catalog', help='List games, winner conditions and parameters')
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    verbose = getattr(args, 'verbose', False)
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING,
                        format='%(levelname)s | %(message)s')
    if args.command == 'catalog':
        return cmd_catalog()
    if args.command == 'verify':
        try:
            window = parse_window(args.window)
        except BadParameters as error:
            print('Configuration error: %s' % error)
            return EXIT_CONFIG
        return cmd_verify(args.trace, window, tuple(args.hypothesis), args.report, args.dump_window)
    if args.command == 'run':
        if args.jobs > 1 and len(args.config) > 1:
            print('Running %i configs in %i processes' % (len(args.config), args.jobs))
            with multiprocessing.Pool(args.jobs) as pool:
                return max(pool.map(run_config_file, args.config))
        overrides = {'game': args.game, 'adversary': args.adversary, 'stages': args.stages, 'seed': args.seed,
                     'window': args.window, 'trace': args.trace, 'report': args.report, 'mode': args.mode,
                     'dump_window': args.dump_window, 'verbose': verbose or None,
                     'params': {'tables': args.tables, 'beta': args.beta, 'fill': args.fill}}
        status = EXIT_OK
        for config_file in args.config or [None]:
            try:
                if config_file is not None:
                    print('Reading config file -> %s' % config_file)
                config = RunConfig(read=config_file, **overrides)
            except (FriedbergError, OSError) as error:
                print('Configuration error: %s' % error)
                return EXIT_CONFIG
            status = max(status, cmd_run(config))
        return status
    parser.print_help()
    return EXIT_CONFIG


if __name__ == '__main__':
    sys.exit(main())
