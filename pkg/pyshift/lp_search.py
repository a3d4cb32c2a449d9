#!/usr/bin/env python
# encoding: utf-8
"""
lp_search.py

Search for the best certificate on a toroid by linear programming.

For a pair cycle of length N the unknowns are one delay d_e per forward
edge e (its reverse gets u - d_e) and the shift amounts x^i_p, i < N.  The
program is

    maximize   (1/N) * sum_i (x^i_{b_i} - x^i_{a_i})
    subject to 0 <= d_e + x^i_q - x^i_p <= u     for every i and forward e = p -> q
               0 <= d_e <= u                      for every forward e

Shifts are taken nonnegative: adding a constant to x^i changes neither the
delays nor the objective.  The reverse edges need no rows of their own,
since u - d is in [0, u] whenever d is.
"""

import itertools
import logging
from collections import namedtuple
from fractions import Fraction

import numpy as np

from pyshift.certificate import Certificate, PairCycle, check_certificate, diagonal_cycle
from pyshift.delays import DelayAssignment, ShiftMatrix
from pyshift.rational import as_uncertainty
from pyshift.simplex import LinearProgram, SolverError, solve_lp
from pyshift.toroid import ParameterError, Port

log = logging.getLogger(__name__)

MAX_ENUMERATION_PROCESSES = 5

BestCertificate = namedtuple('BestCertificate', 'certificate report solution')


def _label(p):
    return ':'.join(str(c) for c in p)


def delay_var(p, h):
    'Name of the delay variable of the forward edge p -> successor(p, h).'
    return 'd[%s/%d]' % (_label(p), h)


def shift_var(i, p):
    return 'x%d[%s]' % (i, _label(p))


def build_bound_lp(toroid, u, cycle, N=None):
    """
    lp = build_bound_lp(toroid, u, cycle, N=None)

    N defaults to len(cycle) and must equal it.  A cycle that does not
    cancel is rejected with ParameterError.
    """
    u = as_uncertainty(u)
    N = len(cycle) if N is None else N
    if N != len(cycle) or N == 0:
        raise ParameterError('execution count %d does not match a cycle of %d pairs' % (N, len(cycle)))
    if not cycle.cancels():
        raise ParameterError('pair cycle does not cancel')
    for pair in cycle:
        for p in pair:
            toroid.check_process(p)

    lp = LinearProgram()
    edges = [toroid.edge(p, Port(h, True)) for p in toroid.processes() for h in range(toroid.m)]
    for e in edges:
        lp.add_variable(delay_var(e.source, e.dim))
    for i in range(N):
        for p in toroid.processes():
            lp.add_variable(shift_var(i, p))

    for i in range(N):
        for e in edges:
            d, xp, xq = delay_var(e.source, e.dim), shift_var(i, e.source), shift_var(i, e.target)
            row = {d: 1, xq: 1, xp: -1}
            lp.add_constraint(row, '>=', 0, ('low', i, e))
            lp.add_constraint(row, '<=', u, ('high', i, e))
    for e in edges:
        d = delay_var(e.source, e.dim)
        lp.add_constraint({d: 1}, '<=', u, ('box high', e))
        lp.add_constraint({d: 1}, '>=', 0, ('box low', e))

    objective = {}
    for i, (a, b) in enumerate(cycle):
        objective[shift_var(i, b)] = objective.get(shift_var(i, b), 0) + Fraction(1, N)
        objective[shift_var(i, a)] = objective.get(shift_var(i, a), 0) - Fraction(1, N)
    lp.set_objective(objective)
    log.debug('%r for %r, N=%d', lp, toroid, N)
    return lp


def certificate_from_solution(toroid, u, cycle, solution):
    'Read the base delays and the shift family back out of an LP optimum.'
    u = as_uncertainty(u)
    values = solution.assignment
    forward = np.empty((toroid.m,) + toroid.shape, dtype=object)
    for p in toroid.processes():
        for h in range(toroid.m):
            forward[(h,) + p] = values[delay_var(p, h)]
    base = DelayAssignment(toroid, u, forward, u - forward)
    shifts = [ShiftMatrix(toroid, dict((p, values[shift_var(i, p)]) for p in toroid.processes()))
              for i in range(len(cycle))]
    return Certificate(toroid, u, base, shifts, cycle)


def assignment_from_certificate(cert):
    """
    The LP point of a certificate with complementary reverse delays, with
    each shift family member translated to be nonnegative.
    """
    values = {}
    for p in cert.toroid.processes():
        for h in range(cert.toroid.m):
            values[delay_var(p, h)] = cert.base.forward_delay(p, h)
    for i, x in enumerate(cert.shifts):
        low = min(x.tolist())
        for p, v in x.items():
            values[shift_var(i, p)] = v - low
    return values


def best_certificate(toroid, u, cycle=None, max_pivots=None):
    """
    certificate, report, solution = best_certificate(toroid, u, cycle=None)

    Solves build_bound_lp for cycle (default: the diagonal cycle) and
    re-verifies the optimum with check_certificate.  The report's bound
    equals the LP objective exactly.
    """
    cycle = diagonal_cycle(toroid) if cycle is None else cycle
    solution = solve_lp(build_bound_lp(toroid, u, cycle), max_pivots=max_pivots)
    if solution.status != 'optimal':
        raise SolverError('bound LP is %s' % solution.status)
    cert = certificate_from_solution(toroid, u, cycle, solution)
    report = check_certificate(cert)
    if not report.ok or report.bound != solution.objective_value:
        raise SolverError('LP optimum %s does not survive the checker: %s'
                          % (solution.objective_value, '; '.join(report.failures) or report.bound))
    return BestCertificate(cert, report, solution)


def enumerate_cycles(toroid, u):
    """
    Solve the bound LP for every cycle pairing the processes (in order) with
    a permutation of them.  Returns [(PairCycle, objective)] sorted by
    objective, largest first; ties keep permutation order.  Only for
    toroids of at most five processes.
    """
    if toroid.nprocs > MAX_ENUMERATION_PROCESSES:
        raise ParameterError('cycle enumeration needs k**m <= %d, got %d'
                             % (MAX_ENUMERATION_PROCESSES, toroid.nprocs))
    processes = toroid.processes()
    found = []
    for perm in itertools.permutations(processes):
        cycle = PairCycle(zip(processes, perm))
        solution = solve_lp(build_bound_lp(toroid, u, cycle))
        if solution.status != 'optimal':
            raise SolverError('bound LP is %s' % solution.status)
        found.append((cycle, solution.objective_value))
    log.info('%d cycles on %r, best %s', len(found), toroid, max(v for _, v in found))
    found.sort(key=lambda item: -item[1])
    return found


if __name__ == '__main__':
    from pyshift.toroid import make_toroid
    best = best_certificate(make_toroid(3, 1), 1)
    print(best.report.bound, best.solution.pivots, 'pivots')
