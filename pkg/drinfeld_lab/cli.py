# The cli module
# Command-line surface of the lab. stdout carries key: value lines, logs go to stderr.
# Exit codes: 0 ok, 1 a check failed, 2 invalid input or construction failure, 3 search exhausted, 4 guard exceeded.
from drinfeld_lab.code import construction, verify
from drinfeld_lab.experiment import repro
from drinfeld_lab.field import poly
from drinfeld_lab.field.tower import make_fq_of_order
from drinfeld_lab.lib import logger, util
from drinfeld_lab.lib.error import (
    ConstructionError, GuardExceededError, InsufficientSurvivorsError, MooreMatrixSingularError, TowerMismatchError,
    ValidationError)
from drinfeld_lab.search import dirichlet
from drinfeld_lab.spec import spec_util
import argparse
import pandas as pd
import sys

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_EXHAUSTED = 3
EXIT_GUARD = 4
# pass column of each sweep DataFrame
REPRO_PASS_COLS = {
    'table1': 'pass',
    'bounds': 'pass',
    'admissible-grid': 'found',
    'reciprocity': 'agree',
}
logger = logger.get_logger(__name__)


def emit(d):
    print(util.to_lines(d))


def parse_columns(text):
    try:
        return [int(col) for col in text.split(',') if col.strip()]
    except ValueError:
        raise ValidationError(f'columns must be comma-separated integers, got {text!r}')


def progression_args(args):
    GF = make_fq_of_order(args.q, args.fq_modulus)
    h = poly.parse_poly(args.h, GF)
    a = poly.const(1, GF) if args.a is None else poly.parse_poly(args.a, GF)
    return h, a


def run_search_prime(args):
    h, a = progression_args(args)
    report = dirichlet.find_prime(h, args.m, a, num_cpus=args.num_cpus)
    emit(report.to_dict())
    return EXIT_OK if report.found is not None else EXIT_EXHAUSTED


def run_admissible(args):
    verdict = dirichlet.admissible(args.q, args.m, args.lr, args.constant)
    emit({
        'q': args.q,
        'm': args.m,
        'lr': args.lr,
        'constant': args.constant,
        'rhs': dirichlet.lemma_rhs(args.q, args.m, args.constant),
        'admissible': verdict,
    })
    return EXIT_OK


def run_build(args):
    if args.name is None:
        params = spec_util.read_params(args.params)
    else:
        params = spec_util.get(args.params, args.name)
    code = construction.build_code(params, strict=args.strict)
    spec_util.write_code(code, args.out)
    emit({
        'out': args.out,
        'P': poly.format_poly(code.tower.P),
        'm': code.tower.m,
        'contract': code.params.contract(),
        'locality_sets': code.locality_sets,
    })
    return EXIT_OK


def run_encode(args):
    code = spec_util.read_code(args.code)
    msg = spec_util.read_message(args.message, code)
    word = code.encode(msg)
    spec_util.write_word(word, args.out, code_ref=args.code)
    emit({'out': args.out, 'n': len(word.entries)})
    return EXIT_OK


def run_erase(args):
    data = spec_util.read_word(args.word)
    columns = parse_columns(args.columns)
    n = len(data['entries'])
    for col in columns:
        if not 1 <= col <= n:
            raise ValidationError(f'{args.word}: column {col} out of range 1..{n}')
        data['entries'][col - 1] = None
    out = args.out or args.word
    util.write(data, out)
    emit({'out': out, 'erased': sorted(set(columns))})
    return EXIT_OK


def run_recover(args):
    code = spec_util.read_code(args.code)
    word = spec_util.read_word(args.word, code)
    erased = word.erased
    recovered = code.recover(word)
    spec_util.write_word(recovered, args.out, code_ref=args.code)
    emit({'out': args.out, 'recovered': erased})
    return EXIT_OK


def run_verify(args):
    code = spec_util.read_code(args.code, strict=args.strict)
    mode = 'exhaustive' if args.exhaustive else 'sampled'
    report = verify.verify_code(code, mode, samples=args.samples, strict=args.strict, seed=args.seed, num_cpus=args.num_cpus)
    if args.report:
        util.write(report, args.report)
    emit(report)
    return EXIT_OK if report['pass'] else EXIT_CHECK_FAILED


def run_dirichlet(args):
    h, a = progression_args(args)
    if args.action == 'count':
        emit({'q': args.q, 'h': poly.format_poly(h), 'm': args.m, 'a': poly.format_poly(a), 'count': dirichlet.count_progression(h, args.m, a)})
        return EXIT_OK
    report = dirichlet.check_bounds(h, args.m, a)
    emit(report)
    return EXIT_OK if report['pass'] else EXIT_CHECK_FAILED


def run_repro(args):
    result = repro.run_target(args.target)
    if isinstance(result, pd.DataFrame):
        col = REPRO_PASS_COLS[args.target]
        passed = int(result[col].sum())
        summary = {'target': args.target, 'rows': len(result), 'passed': passed, 'pass': passed == len(result)}
        if args.target == 'table1':
            summary['summary'] = f'{passed}/{len(result)} rows irreducible and ≡ 1 mod h'
    else:
        summary = {'target': args.target, **result}
    if args.out:
        util.write(result, args.out)
        summary['out'] = args.out
    emit(summary)
    return EXIT_OK if summary['pass'] else EXIT_CHECK_FAILED


def add_progression_args(parser):
    parser.add_argument('--q', type=int, required=True, help='order of F_q')
    parser.add_argument('--fq-modulus', default=None, help='modulus of F_q over F_p as text in a, for prime powers')
    parser.add_argument('--h', required=True, help='modulus h as text in T')
    parser.add_argument('--m', type=int, required=True, help='degree of P')
    parser.add_argument('--a', default=None, help='unit residue a as text in T, default 1')


def make_parser():
    parser = argparse.ArgumentParser(prog='drinfeld_lab', description='Rank-metric codes with rank-locality from Carlitz torsion')
    subparsers = parser.add_subparsers(dest='command', required=True)

    sub = subparsers.add_parser('search-prime', help='first monic irreducible P = u·h + a of degree m')
    add_progression_args(sub)
    sub.add_argument('--num-cpus', type=int, default=1)
    sub.set_defaults(run=run_search_prime)

    sub = subparsers.add_parser('admissible', help='admissibility of (q, m, deg h)')
    sub.add_argument('--q', type=int, required=True)
    sub.add_argument('--m', type=int, required=True)
    sub.add_argument('--lr', type=int, required=True, help='deg h = ℓR')
    sub.add_argument('--constant', choices=dirichlet.LEMMA_CONSTANTS, default='stated')
    sub.set_defaults(run=run_admissible)

    sub = subparsers.add_parser('build', help='build a code from a params file')
    sub.add_argument('--params', required=True, help='params file, or a spec file with --name')
    sub.add_argument('--name', default=None, help='parameter set name inside a spec file')
    sub.add_argument('--strict', '--strict-thm11', dest='strict', action='store_true', help='also require δ < R')
    sub.add_argument('--out', required=True)
    sub.set_defaults(run=run_build)

    sub = subparsers.add_parser('encode', help='encode a message file')
    sub.add_argument('--code', required=True)
    sub.add_argument('--message', required=True)
    sub.add_argument('--out', required=True)
    sub.set_defaults(run=run_encode)

    sub = subparsers.add_parser('erase', help='erase columns of a word file')
    sub.add_argument('--word', required=True)
    sub.add_argument('--columns', required=True, help='1-based columns, e.g. 5,7')
    sub.add_argument('--out', default=None, help='defaults to erasing in place')
    sub.set_defaults(run=run_erase)

    sub = subparsers.add_parser('recover', help='repair erasures of a word file')
    sub.add_argument('--code', required=True)
    sub.add_argument('--word', required=True)
    sub.add_argument('--out', required=True)
    sub.set_defaults(run=run_recover)

    sub = subparsers.add_parser('verify', help='verify a code against its contract')
    sub.add_argument('--code', required=True)
    mode = sub.add_mutually_exclusive_group()
    mode.add_argument('--exhaustive', action='store_true')
    mode.add_argument('--samples', type=int, default=200)
    sub.add_argument('--strict', '--strict-thm11', dest='strict', action='store_true', help='also require δ < R')
    sub.add_argument('--seed', type=int, default=0)
    sub.add_argument('--num-cpus', type=int, default=1)
    sub.add_argument('--report', default=None, help='also write the report as JSON')
    sub.set_defaults(run=run_verify)

    sub = subparsers.add_parser('dirichlet', help='progression counts and error-term bounds')
    sub.add_argument('action', choices=('count', 'check-bounds'))
    add_progression_args(sub)
    sub.set_defaults(run=run_dirichlet)

    sub = subparsers.add_parser('repro', help='reproduction targets')
    sub.add_argument('target', choices=repro.TARGETS)
    sub.add_argument('--out', default=None, help='write the result, csv for sweeps')
    sub.set_defaults(run=run_repro)
    return parser


def main(argv=None):
    '''
    Parse argv and run a subcommand, mapping lab errors to exit codes
    @example

    cli.main(['admissible', '--q', '5', '--m', '16', '--lr', '2'])
    # => 0
    '''
    args = make_parser().parse_args(argv)
    assert args.command is not None
    if getattr(args, 'samples', None) is not None and args.samples < 1:
        logger.error('--samples must be positive')
        return EXIT_INVALID
    try:
        return args.run(args)
    except GuardExceededError as e:
        logger.error(f'guard exceeded: {e}')
        return EXIT_GUARD
    except (ValidationError, ConstructionError, MooreMatrixSingularError, InsufficientSurvivorsError, TowerMismatchError) as e:
        logger.error(f'{type(e).__name__}: {e}')
        return EXIT_INVALID
    except Exception:
        logger.exception(f'{args.command} failed')
        return EXIT_CHECK_FAILED


if __name__ == '__main__':
    sys.exit(main())
