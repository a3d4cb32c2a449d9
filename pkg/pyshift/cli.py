#!/usr/bin/env python
# encoding: utf-8
"""
cli.py

The pyshift command.

    pyshift bound --variant toroid-odd --k 5 --m 1 --u 1
    pyshift cert generate --k 5 --m 1 --u 1 --output cert.json
    pyshift cert check cert.json
    pyshift lp --k 3 --m 1 [--cycle FILE | --enumerate]
    pyshift sim --k 5 --m 1 --algorithm reference [--shift I | --all-shifts] [--export FILE]
    pyshift figure --which alpha|shifted:I --k 5 --m 1 [--format csv|json]

Output formats: figure writes CSV (or JSON rows with --format json); cert,
lp and sim always write JSON; bound prints plain text.

Exit status: 0 success, 1 usage, 2 schema, 3 verification failure,
4 simulator or solver guard.
"""

import argparse
import logging
import re
import sys

from pyshift import certio
from pyshift.algorithms import ALGORITHMS, make_algorithm
from pyshift.bounds import VARIANTS, closed_form, gap
from pyshift.certificate import check_certificate, odd_certificate, shift_matrix
from pyshift.delays import apply_shift_to_delays, base_delays
from pyshift.lp_search import best_certificate, enumerate_cycles
from pyshift.rational import approx, as_uncertainty, fmt
from pyshift.simplex import SolverError
from pyshift.simulator import (MAX_EVENTS, HardwareClocks, SimulationError, adjusted_offset,
                               indistinguishable, max_skew, run, shift_execution)
from pyshift.toroid import ParameterError, make_toroid
from pyshift.witness import skew_witness

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SCHEMA = 2
EXIT_FAILED = 3
EXIT_GUARD = 4


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    'argparse with usage errors mapped to exit status 1.'

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, '%s: error: %s\n' % (self.prog, message))


def rational_arg(text):
    try:
        return as_uncertainty(text)
    except (TypeError, ValueError) as err:
        raise argparse.ArgumentTypeError(str(err))


def figure_arg(text):
    match = re.match(r'^(alpha|shifted:(\d+))$', text)
    if not match:
        raise argparse.ArgumentTypeError("expected 'alpha' or 'shifted:I', got %r" % text)
    return None if match.group(2) is None else int(match.group(2))


def _toroid(args):
    if args.k is None:
        raise UsageError('--k is required')
    return make_toroid(args.k, args.m)


def _emit(text, path=None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, 'w', newline='') as f:
            f.write(text)


def cmd_bound(args):
    if args.variant == 'clique':
        if args.n is None:
            raise UsageError('clique needs --n')
        params = args.n
    else:
        params = _toroid(args)
    value = closed_form(args.variant, params, args.u)
    print(fmt(value))
    print('approx %s (approximate)' % approx(value))
    if args.gap:
        if args.variant != 'toroid-odd':
            raise UsageError('--gap applies to --variant toroid-odd')
        print('gap %s over toroid-odd-prior %s' % (fmt(gap(params, args.u)),
                                                   fmt(closed_form('toroid-odd-prior', params, args.u))))
    return EXIT_OK


def cmd_cert_generate(args):
    cert = odd_certificate(_toroid(args), args.u)
    _emit(certio.dumps(certio.certificate_to_dict(cert)), args.output)
    return EXIT_OK


def cmd_cert_check(args):
    with open(args.file) as f:
        cert = certio.load_certificate(f)
    report = check_certificate(cert)
    _emit(certio.dumps(certio.report_to_dict(report)), args.output)
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_lp(args):
    toroid = _toroid(args)
    if args.enumerate:
        found = enumerate_cycles(toroid, args.u)
        data = [{'cycle': [{'a': list(a), 'b': list(b)} for a, b in cycle],
                 'objective_value': fmt(value)} for cycle, value in found]
        _emit(certio.dumps(data), args.output)
        return EXIT_OK
    cycle = None
    if args.cycle is not None:
        with open(args.cycle) as f:
            cycle = certio.load_cycle(f, toroid)
        if not cycle.cancels():
            raise certio.SchemaError('%s: pair cycle does not cancel' % args.cycle)
    best = best_certificate(toroid, args.u, cycle)
    data = {'objective_value': fmt(best.solution.objective_value),
            'objective_approx': approx(best.solution.objective_value),
            'solution': certio.solution_to_dict(best.solution),
            'certificate': certio.certificate_to_dict(best.certificate),
            'report': certio.report_to_dict(best.report)}
    _emit(certio.dumps(data), args.output)
    return EXIT_OK


def cmd_sim(args):
    toroid = _toroid(args)
    algorithm = make_algorithm(args.algorithm)
    if args.shift is None:
        report = skew_witness(toroid, args.u, algorithm, max_events=args.max_events)
        _emit(certio.dumps(certio.witness_to_dict(report)), args.output)
        if args.export:
            records = [certio.record_to_dict(report.base, report.hc)]
            cert = odd_certificate(toroid, args.u)
            for x in cert.shifts:
                records.append(certio.record_to_dict(*shift_execution(report.base, report.hc, x)))
            _emit(certio.dumps(records), args.export)
        return EXIT_OK if report.holds else EXIT_FAILED

    cert = odd_certificate(toroid, args.u)
    if not 0 <= args.shift < len(cert.shifts):
        raise ParameterError('--shift must be in [0, %d), got %d' % (len(cert.shifts), args.shift))
    hc = HardwareClocks.zero(toroid)
    base = run(toroid, hc, cert.base, algorithm, max_events=args.max_events)
    shifted, hc_i = shift_execution(base, hc, cert.shifts[args.shift])
    a, b = cert.cycle[args.shift]
    same = indistinguishable(base, shifted)
    data = {'algorithm': algorithm.name,
            'index': args.shift,
            'a': list(a), 'b': list(b),
            'skew': fmt(adjusted_offset(shifted, hc_i, a) - adjusted_offset(shifted, hc_i, b)),
            'max_skew': fmt(max_skew(shifted, hc_i)),
            'admissible': shifted.is_admissible(args.u),
            'indistinguishable': same}
    _emit(certio.dumps(data), args.output)
    if args.export:
        _emit(certio.dumps([certio.record_to_dict(base, hc),
                            certio.record_to_dict(shifted, hc_i)]), args.export)
    return EXIT_OK if same else EXIT_FAILED


def cmd_figure(args):
    toroid = _toroid(args)
    d = base_delays(toroid, args.u)
    if args.which is not None:
        d = apply_shift_to_delays(d, shift_matrix(args.which, toroid, args.u))
    if args.format == 'json':
        _emit(certio.dumps(certio.delays_to_dict(d)), args.output)
    elif args.output is None:
        certio.write_delays_csv(d, sys.stdout)
    else:
        with open(args.output, 'w', newline='') as f:
            certio.write_delays_csv(d, f)
    return EXIT_OK


def build_parser():
    common = ArgumentParser(add_help=False)
    common.add_argument('--verbose', '-v', action='store_true', help='log progress to stderr')
    common.add_argument('--output', '-o', help='write the result here instead of stdout')
    shape = ArgumentParser(add_help=False)
    shape.add_argument('--k', type=int, help='processes per dimension')
    shape.add_argument('--m', type=int, default=1, help='number of dimensions (default 1)')
    shape.add_argument('--u', type=rational_arg, default=as_uncertainty(1),
                       help='uniform uncertainty, an integer or num/den (default 1)')

    parser = ArgumentParser(prog='pyshift', description='Clock synchronization lower bounds on odd toroids.')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('bound', parents=[common, shape], help='closed-form bounds')
    p.add_argument('--variant', choices=sorted(VARIANTS), default='toroid-odd')
    p.add_argument('--n', type=int, help='process count for --variant clique')
    p.add_argument('--gap', action='store_true', help='also print the gap to toroid-odd-prior')
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser('cert', help='generate or check certificates')
    cert = p.add_subparsers(dest='action', metavar='action')
    cert.required = True
    q = cert.add_parser('generate', parents=[common, shape], help='write the odd-toroid certificate')
    q.set_defaults(func=cmd_cert_generate)
    q = cert.add_parser('check', parents=[common], help='re-verify a certificate file')
    q.add_argument('file')
    q.set_defaults(func=cmd_cert_check)

    p = sub.add_parser('lp', parents=[common, shape], help='best certificate by linear programming')
    group = p.add_mutually_exclusive_group()
    group.add_argument('--cycle', help='JSON file with the pair cycle (default: diagonal)')
    group.add_argument('--enumerate', action='store_true', help='try every cycle, k**m <= 5')
    p.set_defaults(func=cmd_lp)

    p = sub.add_parser('sim', parents=[common, shape], help='run an algorithm and measure skews')
    p.add_argument('--algorithm', choices=sorted(ALGORITHMS), default='reference')
    group = p.add_mutually_exclusive_group()
    group.add_argument('--shift', type=int, help='compare the base run with execution I only')
    group.add_argument('--all-shifts', action='store_true', help='skew report over every execution (default)')
    p.add_argument('--export', help='write the execution records as JSON')
    p.add_argument('--max-events', type=int, default=MAX_EVENTS)
    p.set_defaults(func=cmd_sim)

    p = sub.add_parser('figure', parents=[common, shape], help='per-edge delays as CSV')
    p.add_argument('--which', type=figure_arg, default=None, metavar='alpha|shifted:I')
    p.add_argument('--format', choices=('csv', 'json'), default='csv', help='output format (default csv)')
    p.set_defaults(func=cmd_figure)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format='%(name)s: %(message)s')
    try:
        return args.func(args)
    except UsageError as err:
        parser.error(str(err))
    except certio.SchemaError as err:
        sys.stderr.write('pyshift: schema error: %s\n' % err)
        return EXIT_SCHEMA
    except ParameterError as err:
        sys.stderr.write('pyshift: %s\n' % err)
        return EXIT_USAGE
    except OSError as err:
        sys.stderr.write('pyshift: %s\n' % err)
        return EXIT_USAGE
    except (SimulationError, SolverError) as err:
        sys.stderr.write('pyshift: %s\n' % err)
        return EXIT_GUARD


if __name__ == '__main__':
    sys.exit(main())
