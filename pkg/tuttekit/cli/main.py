"""Command line front end: `tuttekit <command> [options] <input>`.

Commands:
    tutte   Tutte polynomial by one engine or all of them.
    coeff   One coefficient of T(1, y) or T(x, 1) by a chosen formula.
    report  Flats, circuits, f_k, d_k and graph cut invariants.
    verify  Every formula against the engine, as a verification report.
    fuzz    Seeded random instances through `verify`.

Exit status: 0 success, 1 usage, 2 parse, 3 precondition or validity
range, 4 verification failure, 5 size limit.
"""
import argparse
import logging
import sys
from typing import List, Optional

from tuttekit import env
from tuttekit.cli.fuzz import FAMILIES, run_fuzz
from tuttekit.cli.output import (
    polynomial_data, report_data, report_lines, to_json
)
from tuttekit.cli.parsing import parse_input
from tuttekit.engines import engine_names, tutte, tutte_deletion_contraction
from tuttekit.errors import (
    InvalidBases, TuttekitError, UsageError, VerificationFailure
)
from tuttekit.graphs import Multigraph, graph_matroid
from tuttekit.matroid import require_exhaustive
from tuttekit.perf_tools import Timer
from tuttekit.theorems import circuits, hyperplanes, sums, verify
from tuttekit.version import version

log = logging.getLogger(__name__)

Y_METHODS = {
    'sigma': (sums.coeff_y_sigma, lambda m: 'valid: all j'),
    'hyperplane': (hyperplanes.coeff_y_hyperplane,
                   hyperplanes.hyperplane_validity),
    'cocircuit': (hyperplanes.coeff_y_cocircuit,
                  hyperplanes.hyperplane_validity),
    'threshold': (hyperplanes.coeff_y_threshold,
                  hyperplanes.threshold_y_validity),
}
X_METHODS = {
    'tau': (sums.coeff_x_tau, lambda m: 'valid: all i'),
    'dual-sigma': (sums.coeff_x_dual_sigma, lambda m: 'valid: all i'),
    'circuit': (circuits.coeff_x_circuit, circuits.circuit_validity),
    'threshold': (circuits.coeff_x_threshold,
                  circuits.threshold_x_validity),
}


class ArgumentParser(argparse.ArgumentParser):
    """Reports bad options as `UsageError` instead of exiting."""
    def error(self, message):
        raise UsageError(f'{self.prog}: {message}')


def _build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true',
                        help='emit one JSON object instead of text')
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='log to stderr (repeat for debug output)')
    common.add_argument('--max-size', type=int, default=None,
                        help='exhaustive enumeration limit (hard cap '
                             f'{env.HARD_LIMIT}, default '
                             f'${env.ENV_VARIABLE} or '
                             f'{env.DEFAULT_CLI_LIMIT})')

    parser = ArgumentParser(prog='tuttekit',
                            description='Exact Tutte polynomial toolkit.')
    parser.add_argument('--version', action='version',
                        version=f'tuttekit {version}')
    commands = parser.add_subparsers(dest='command', required=True,
                                     parser_class=ArgumentParser)

    engines = engine_names() + ['all']

    cmd = commands.add_parser('tutte', parents=[common],
                              help='Tutte polynomial')
    cmd.add_argument('input', help="graph or matroid file, '-' for stdin")
    cmd.add_argument('--engine', choices=engines, default='subset')
    cmd.add_argument('--pivot', choices=['highest', 'random'],
                     default='highest', help='deletion-contraction pivot')
    cmd.add_argument('--seed', type=int, default=None,
                     help='seed for the random pivot rule')
    cmd.add_argument('--no-cache', action='store_true',
                     help='disable deletion-contraction memoisation')
    at = cmd.add_mutually_exclusive_group()
    at.add_argument('--at-x-1', action='store_true', help='print T(1, y)')
    at.add_argument('--at-y-1', action='store_true', help='print T(x, 1)')

    cmd = commands.add_parser('coeff', parents=[common],
                              help='one coefficient of T(1,y) or T(x,1)')
    cmd.add_argument('input')
    index = cmd.add_mutually_exclusive_group(required=True)
    index.add_argument('--y', type=int, dest='j', help='[y^j] T(1, y)')
    index.add_argument('--x', type=int, dest='i', help='[x^i] T(x, 1)')
    cmd.add_argument('--method', default='engine',
                     choices=sorted({'engine'} | set(Y_METHODS)
                                    | set(X_METHODS)))
    cmd.add_argument('--engine', choices=engines, default='subset')

    cmd = commands.add_parser('report', parents=[common],
                              help='structural invariants')
    cmd.add_argument('input')

    cmd = commands.add_parser('verify', parents=[common],
                              help='check every formula against the engine')
    cmd.add_argument('input')
    cmd.add_argument('--theorems', default='all',
                     help='all, or a comma separated list of theorem keys')
    cmd.add_argument('--engine', choices=engines, default='subset')

    cmd = commands.add_parser('fuzz', parents=[common],
                              help='verify seeded random instances')
    cmd.add_argument('--family', choices=FAMILIES, default='graphs')
    cmd.add_argument('--max-elements', type=int, default=8)
    cmd.add_argument('--seed', type=int, default=0)
    cmd.add_argument('--trials', type=int, default=100)
    cmd.add_argument('--connected', action='store_true',
                     help='sample connected multigraphs only')
    cmd.add_argument('--workers', type=int, default=1)
    cmd.add_argument('--theorems', default='all')
    cmd.add_argument('--engine', choices=engines, default='all')
    return parser


def _configure(args):
    level = logging.WARNING
    if args.verbose == 1:
        level = logging.INFO
    elif args.verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')
    env.max_ground = None
    if args.max_size is not None:
        if args.max_size < 0:
            raise UsageError(f'--max-size must be nonnegative, '
                             f'got {args.max_size}')
        env.max_ground = args.max_size
    else:
        env.max_ground = env.exhaustive_limit(env.DEFAULT_CLI_LIMIT)


def _emit(args, data, lines: List[str]):
    if args.json:
        print(to_json(data))
    else:
        for line in lines:
            print(line)


def run_tutte(args) -> int:
    instance = parse_input(args.input)
    if args.engine == 'delcon' and isinstance(instance, Multigraph):
        poly = tutte_deletion_contraction(
            instance, cache=not args.no_cache, pivot=args.pivot,
            seed=args.seed
        )
    else:
        poly = tutte(instance, args.engine)

    if args.at_x_1:
        result = poly.specialize_x_at_1()
    elif args.at_y_1:
        result = poly.specialize_y_at_1()
    else:
        result = poly
    _emit(args, {'engine': args.engine, 'terms': polynomial_data(result)},
          result.lines())
    return 0


def run_coeff(args) -> int:
    instance = parse_input(args.input)
    matroid = (graph_matroid(instance) if isinstance(instance, Multigraph)
               else instance)
    side, index = ('y', args.j) if args.j is not None else ('x', args.i)

    if args.method == 'engine':
        sums.require_index(index, 'j' if side == 'y' else 'i')
        poly = tutte(instance, args.engine)
        if side == 'y':
            value = poly.specialize_x_at_1()[index]
        else:
            value = poly.specialize_y_at_1()[index]
        note = f'direct: {args.engine} engine'
    else:
        methods = Y_METHODS if side == 'y' else X_METHODS
        if args.method not in methods:
            raise UsageError(
                f'--method {args.method} does not apply to --{side}; '
                f'expected one of engine, {", ".join(sorted(methods))}'
            )
        formula, validity = methods[args.method]
        value = formula(matroid, index)
        note = validity(matroid)

    _emit(args, {'side': side, 'index': index, 'method': args.method,
                 'value': value, 'note': note},
          [f'{value} ({note})'])
    return 0


def run_report(args) -> int:
    data = report_data(parse_input(args.input))
    _emit(args, data, report_lines(data))
    return 0


def run_verify(args) -> int:
    report = verify(parse_input(args.input), args.theorems, args.engine)
    _emit(args, report.to_dict(), report.lines())
    return 0 if report.agreement else VerificationFailure.exit_code


def run_fuzz_command(args) -> int:
    require_exhaustive(args.max_elements, 'fuzz')
    outcomes, failure = run_fuzz(
        args.family, args.max_elements, args.seed, args.trials,
        connected=args.connected, theorems=args.theorems,
        engine=args.engine, workers=args.workers
    )
    lines = [f'{o.trial} {"pass" if o.passed else "fail"} {o.instance}'
             for o in outcomes]
    lines.append(f'TRIALS: {len(outcomes)} FAILURES: '
                 f'{sum(1 for o in outcomes if not o.passed)}')
    if failure is not None:
        lines.append(f'FIRST FAILURE: trial {failure.trial} '
                     f'{failure.instance}')
        lines += failure.lines
    data = {
        'family': args.family,
        'seed': args.seed,
        'trials': [[o.trial, o.passed, o.instance] for o in outcomes],
        'first_failure': None if failure is None else {
            'trial': failure.trial,
            'instance': failure.instance,
            'report': failure.lines
        }
    }
    _emit(args, data, lines)
    return 0 if failure is None else VerificationFailure.exit_code


COMMANDS = {
    'tutte': run_tutte,
    'coeff': run_coeff,
    'report': run_report,
    'verify': run_verify,
    'fuzz': run_fuzz_command,
}


def main(argv: Optional[List[str]] = None) -> int:
    previous_limit = env.max_ground
    try:
        args = _build_parser().parse_args(argv)
        _configure(args)
        log.debug('arguments: %s', vars(args))
        with Timer(args.command, quiet=not args.verbose):
            return COMMANDS[args.command](args)
    except InvalidBases as ex:
        print(f'error: {ex}', file=sys.stderr)
        if ex.certificate is not None:
            print(f'certificate: {ex.certificate}', file=sys.stderr)
        return ex.exit_code
    except TuttekitError as ex:
        print(f'error: {ex}', file=sys.stderr)
        return ex.exit_code
    finally:
        env.max_ground = previous_limit
