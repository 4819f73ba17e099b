"""
Command-line front end. Every subcommand prints one JSON document on stdout; logs and
progress bars go to stderr.

Exit codes: 0 success / Certified, 1 error, 2 NotCoprime, 3 Inconclusive,
4 enumeration budget exceeded, 5 property check failed.
"""
import argparse
import logging
import sys
from typing import List, Optional

from config import APP_NAME, APP_VERSION
from modules.chambers import ample_check, chamber_report
from modules.families import (FAMILIES, compare_prediction, kronecker_family_sweep,
                              kronecker_min_dim_check, mukai_scan, subspace_family_sweep,
                              thickened_family_sweep)
from modules.fano import fano_certifier
from modules.models import Stability
from modules.quiver_core import topological_order
from modules.reports import report_manager
from modules.stability import retraction, section_a
from modules.toric import (enumerate_toric_fano, spec_from_quiver, toric_fano_conditions,
                           toric_invariants)
from utils.constants import (EXIT_BUDGET, EXIT_BY_STATUS, EXIT_CHECK_FAILED, EXIT_ERROR, EXIT_OK,
                             FIXTURE_PREFIX)
from utils.exceptions import BudgetExceeded, QuiverError
from utils.fixtures import QUIVER_FIXTURES, TORIC_FIXTURES, fixture_dimension_vector
from utils.logger import logger, set_console_level
from utils.quiver_io import load_quiver
from utils.validators import (validate_dim_vector, validate_export_path, validate_int_vector,
                              validate_positive_int)

CHECK_NAMES = ['kronecker-min-dim', 'mukai', 'subspace', 'kronecker', 'thickened']


class UsageError(Exception):
    """Bad command-line input; reported on stderr with exit code 1"""


def _emit(data):
    print(report_manager.to_json(data))


def _parse(validator, text, *args):
    ok, msg, value = validator(text, *args)
    if not ok:
        raise UsageError(msg)
    return value


def _dimension_vector(args, Q):
    if args.d is None:
        if args.quiver.startswith(FIXTURE_PREFIX):
            return fixture_dimension_vector(args.quiver[len(FIXTURE_PREFIX):])
        raise UsageError("A dimension vector is required (-d 1,1,2)")
    return _parse(validate_dim_vector, args.d, Q.n)


# ==================== SUBCOMMANDS ====================

def cmd_certify(args) -> int:
    Q = load_quiver(args.quiver)
    d = _dimension_vector(args, Q)
    certificate = fano_certifier.certify(Q, d, args.budget)
    _emit(report_manager.certificate_to_dict(certificate))
    return EXIT_BY_STATUS[certificate.status]


def cmd_family(args) -> int:
    if args.name not in FAMILIES:
        raise UsageError(f"Unknown family '{args.name}'. Available: {', '.join(FAMILIES)}")

    names, builder, predictor = FAMILIES[args.name]
    params = {}
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"Family '{args.name}' needs -{name}")
        minimum = 0 if args.name == 'kronecker' and name in ('d', 'e') else 1
        params[name] = _parse(validate_positive_int, value, name, minimum)

    Q, d = builder(*(params[name] for name in names))
    prediction = predictor(*(params[name] for name in names))
    certificate = fano_certifier.certify(Q, d, args.budget)
    comparison = compare_prediction(args.name, params, prediction, certificate)

    _emit({
        'family': args.name,
        'params': params,
        'dimension_vector': list(d),
        'prediction': prediction,
        'certificate': report_manager.certificate_to_dict(certificate),
        **comparison,
    })
    return EXIT_OK if comparison['agree'] else EXIT_CHECK_FAILED


def cmd_chambers(args) -> int:
    Q = load_quiver(args.quiver)
    d = _dimension_vector(args, Q)
    theta = _parse(validate_int_vector, args.theta, Q.n)
    stab = Stability(theta, d)

    other = None
    ample = None
    if args.theta2 is not None:
        candidate = _parse(validate_int_vector, args.theta2, Q.n)
        if args.ample:
            a = _parse(validate_int_vector, args.section, Q.n) if args.section else section_a(d)
            ample = ample_check(Q, stab, candidate, a, args.budget)
            other = retraction(d, a, candidate)
        else:
            other = Stability(candidate, d)
    elif args.ample:
        raise UsageError("--ample needs --theta2")

    report = report_manager.chamber_report_to_dict(chamber_report(stab, other, args.budget))
    if ample is not None:
        report['ample'] = ample
    _emit(report)
    return EXIT_OK


def cmd_checks(args) -> int:
    if args.name not in CHECK_NAMES:
        raise UsageError(f"Unknown check '{args.name}'. Available: {', '.join(CHECK_NAMES)}")

    path = None
    if args.export:
        if args.name not in FAMILIES:
            raise UsageError(f"--export is only available for family sweeps, not '{args.name}'")
        path = _parse(validate_export_path, args.export)

    export_rows = None
    if args.name == 'kronecker-min-dim':
        reports = [kronecker_min_dim_check(m, args.bound) for m in (args.m or [3, 4, 5, 6])]
        result = {'check': args.name, 'reports': reports, 'passed': all(r['passed'] for r in reports)}
    elif args.name == 'mukai':
        result = mukai_scan(args.max_m or 5, args.max_k or 5)
    else:
        sweep_options = {'jobs': args.jobs, 'budget': args.budget, 'include_cases': bool(args.export)}
        if args.name == 'subspace':
            result = subspace_family_sweep(args.max_m or 8, args.max_d or 8, **sweep_options)
        elif args.name == 'kronecker':
            result = kronecker_family_sweep(args.m or [3, 4, 5], args.max_de, **sweep_options)
        else:
            max_m, max_k = args.max_m or 4, args.max_k or 4
            result = thickened_family_sweep(max_m, max_k, args.max_d or max_m * max_k, **sweep_options)
        export_rows = [{**case['params'], 'status': case['status'], 'dim': case['dim'],
                        'rank': case['rank'], 'index': case['index'],
                        'expected_status': case['expected_status'], 'agree': case['agree']}
                       for case in result.pop('results', [])]

    if path:
        report_manager.export_records(export_rows, path, sheet_name=args.name)

    _emit(result)
    return EXIT_OK if result['passed'] else EXIT_CHECK_FAILED


def cmd_toric_enumerate(args) -> int:
    n = _parse(validate_positive_int, args.n, "n", 2)
    max_arrows = _parse(validate_positive_int, args.max_arrows, "max-arrows", 0)
    path = _parse(validate_export_path, args.export) if args.export else None

    catalog = enumerate_toric_fano(n, max_arrows, budget=args.budget, jobs=args.jobs,
                                   progress=args.progress)
    if path:
        report_manager.export_catalog(catalog, path)
    _emit(report_manager.catalog_to_list(catalog))
    return EXIT_OK


def cmd_toric_check(args) -> int:
    Q = load_quiver(args.quiver)
    spec = spec_from_quiver(Q)
    conditions = toric_fano_conditions(spec)
    invariants = toric_invariants(spec)
    certificate = fano_certifier.certify(Q, [1] * Q.n, args.budget)

    expected = None
    name = args.quiver[len(FIXTURE_PREFIX):] if args.quiver.startswith(FIXTURE_PREFIX) else None
    if name in TORIC_FIXTURES:
        expected = TORIC_FIXTURES[name][2]

    report = report_manager.toric_check_report(spec, conditions, invariants, certificate, expected,
                                               vertex_order=topological_order(Q))
    _emit(report)
    passed = report['agree'] and report.get('matches_expected', True)
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def cmd_fixtures(args) -> int:
    fixtures = []
    for name, (n, arrows, expected) in TORIC_FIXTURES.items():
        fixtures.append({'name': FIXTURE_PREFIX + name, 'kind': 'toric', 'n': n,
                         'arrows': [list(a) for a in arrows], 'd': [1] * n,
                         'expected': list(expected)})
    for name, (n, arrows, d) in QUIVER_FIXTURES.items():
        fixtures.append({'name': FIXTURE_PREFIX + name, 'kind': 'quiver', 'n': n,
                         'arrows': [list(a) for a in arrows], 'd': list(d)})
    _emit(fixtures)
    return EXIT_OK


# ==================== PARSER ====================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--budget', type=int, default=None,
                        help='maximum vectors/specs one scan may visit (default: QFL_BUDGET or 10^8)')
    common.add_argument('--jobs', type=int, default=None,
                        help='worker processes for batch scans (default: QFL_JOBS or 1)')
    common.add_argument('-v', '--verbose', action='store_true', help='debug logging on stderr')

    parser = argparse.ArgumentParser(prog=APP_NAME,
                                     description='Exact Fano certification for quiver moduli spaces')
    parser.add_argument('--version', action='version', version=f'{APP_NAME} {APP_VERSION}')
    sub = parser.add_subparsers(dest='command')

    p = sub.add_parser('certify', parents=[common], help='certify (Q, d)')
    p.add_argument('quiver', help='quiver JSON file or @fixture')
    p.add_argument('-d', help='dimension vector, e.g. 1,1,1,1,1,2')
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser('family', parents=[common], help='predictor vs live certificate')
    p.add_argument('name', help=', '.join(FAMILIES))
    p.add_argument('-m')
    p.add_argument('-d')
    p.add_argument('-e')
    p.add_argument('-k')
    p.set_defaults(func=cmd_family)

    p = sub.add_parser('chambers', parents=[common], help='chamber membership and comparison')
    p.add_argument('quiver', help='quiver JSON file or @fixture')
    p.add_argument('-d', help='dimension vector')
    p.add_argument('--theta', required=True, help='stability vanishing on d')
    p.add_argument('--theta2', help='second stability')
    p.add_argument('--ample', action='store_true',
                   help='test whether r(theta2) is ample relative to the chamber of theta')
    p.add_argument('--section', help='integer form a with a(d) = 1 (default: deterministic choice)')
    p.set_defaults(func=cmd_chambers)

    p = sub.add_parser('checks', parents=[common], help='property scans')
    p.add_argument('name', help=', '.join(CHECK_NAMES))
    p.add_argument('-m', type=int, action='append', help='Kronecker arrow count (repeatable)')
    p.add_argument('--bound', type=int, default=12)
    p.add_argument('--max-m', type=int)
    p.add_argument('--max-k', type=int)
    p.add_argument('--max-d', type=int)
    p.add_argument('--max-de', type=int, default=5)
    p.add_argument('--export', help='write sweep cases to .csv or .xlsx')
    p.set_defaults(func=cmd_checks)

    p = sub.add_parser('toric-enumerate', parents=[common], help='catalog of toric Fano quivers')
    p.add_argument('-n', required=True)
    p.add_argument('--max-arrows', required=True)
    p.add_argument('--export', help='also write the catalog to .csv or .xlsx')
    p.add_argument('--progress', action='store_true', help='progress bar on stderr')
    p.set_defaults(func=cmd_toric_enumerate)

    p = sub.add_parser('toric-check', parents=[common], help='toric conditions vs certifier for d = 1')
    p.add_argument('quiver', help='quiver JSON file or @fixture')
    p.set_defaults(func=cmd_toric_check)

    p = sub.add_parser('fixtures', parents=[common], help='list embedded quivers')
    p.set_defaults(func=cmd_fixtures)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors, which would read as NotCoprime
        return EXIT_OK if e.code in (0, None) else EXIT_ERROR

    if not getattr(args, 'func', None):
        parser.print_help(sys.stderr)
        return EXIT_ERROR

    if args.verbose:
        set_console_level(logging.DEBUG)

    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, QuiverError, KeyError, IndexError, ValueError, OverflowError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except Exception as e:
        logger.error(f"Unexpected error in '{args.command}': {e}", exc_info=True)
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ERROR
