#!/usr/bin/env python
# encoding: utf-8
"""
certificate.py

The lower-bound proof object for odd toroids and its checker.

A certificate is a base delay assignment, a family of N shift matrices and a
pair cycle (a_i, b_i), i < N.  If every shifted assignment is admissible, an
algorithm that keeps adjusted clocks within eps satisfies, in execution i,

    AC_a - AC_b + x^i_b - x^i_a <= eps        (AC^i_p = AC_p - x^i_p)

and when the a's and b's are the same multiset the AC terms cancel on
summing, leaving eps >= (1/N) * sum_i (x^i_b - x^i_a).

The shift family for k = 2r+1 is built from the per-coordinate table W:

    0 <= i < r:                          r <= i < k:
      0 <= c <= i          0               0 <= c <= i-r     c*u
      i < c <= r           (c-i)*u         i-r < c <= r      (i-r)*u
      r < c <= r+i+1       (r-i)*u         r < c <= i        (i-c)*u
      r+i+1 < c <= 2r      (2r-c+1)*u      i < c <= 2r       0

with x^i_p = sum_j W^i_{p_j}.
"""

import logging
from collections import Counter

import numpy as np

from pyshift.delays import (ShiftMatrix, apply_shift_to_delays, base_delays,
                            is_admissible)
from pyshift.rational import as_uncertainty
from pyshift.toroid import ParameterError

log = logging.getLogger(__name__)

SIGN_CONVENTION = ('AC^i_p = AC_p - x^i_p; execution i contributes x^i_b - x^i_a '
                   'and eps >= (1/N) * sum of contributions')


def _check_index(toroid, i, what='execution index'):
    toroid.require_odd()
    if not 0 <= i < toroid.k:
        raise ParameterError('%s must be in [0, %d), got %r' % (what, toroid.k, i))


def w_entry(i, c, toroid, u):
    'W^i_c, the shift of coordinate value c in execution i.'
    _check_index(toroid, i)
    _check_index(toroid, c, 'coordinate')
    u = as_uncertainty(u)
    r = toroid.r
    if i < r:
        if c <= i:
            return 0 * u
        if c <= r:
            return (c - i) * u
        if c <= r + i + 1:
            return (r - i) * u
        return (2 * r - c + 1) * u
    if c <= i - r:
        return c * u
    if c <= r:
        return (i - r) * u
    if c <= i:
        return (i - c) * u
    return 0 * u


def w_row(i, toroid, u):
    'The row [W^i_0, ..., W^i_{k-1}].'
    return [w_entry(i, c, toroid, u) for c in range(toroid.k)]


def shift_matrix(i, toroid, u):
    'x^i with x^i_p = sum over dimensions j of W^i_{p_j}.'
    row = np.empty(toroid.k, dtype=object)
    row[:] = w_row(i, toroid, u)
    coords = np.indices(toroid.shape)
    x = row[coords[0]]
    for j in range(1, toroid.m):
        x = x + row[coords[j]]
    return ShiftMatrix(toroid, x)


def delta(i, c, toroid, u):
    """
    Change of the delay on a forward edge leaving coordinate c in execution
    i, W^i_{c+1} - W^i_c.  Always one of -u, 0, u.
    """
    return w_entry(i, (c + 1) % toroid.k, toroid, u) - w_entry(i, c, toroid, u)


def printed_delta(i, c, toroid, u):
    """
    The delay change as tabulated row by row in the admissibility argument,
    or None where the table has no row.  For i < r the rows skip
    c = r+i+1; delta() gives -u there.
    """
    _check_index(toroid, i)
    _check_index(toroid, c, 'coordinate')
    u = as_uncertainty(u)
    r = toroid.r
    if i < r:
        if c < i:
            return 0 * u
        if c < r:
            return u
        if c < r + i + 1:
            return 0 * u
        if r + i + 2 <= c <= 2 * r:
            return -u
        return None
    if c < i - r:
        return u
    if c < r:
        return 0 * u
    if c < i:
        return -u
    return 0 * u


def delta_table_discrepancies(toroid, u):
    'List of (i, c, delta) wherever the tabulated delta has no row.'
    return [(i, c, delta(i, c, toroid, u))
            for i in range(toroid.k) for c in range(toroid.k)
            if printed_delta(i, c, toroid, u) is None]


class PairCycle(object):
    """
    A sequence of process pairs (a_i, b_i).  It cancels when the multiset
    of a's equals the multiset of b's.
    """

    def __init__(self, pairs):
        self.pairs = [(tuple(a), tuple(b)) for a, b in pairs]

    def cancels(self):
        return Counter(a for a, _ in self.pairs) == Counter(b for _, b in self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __getitem__(self, i):
        return self.pairs[i]

    def __eq__(self, other):
        return isinstance(other, PairCycle) and other.pairs == self.pairs

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return 'PairCycle(%r)' % (self.pairs,)


def diagonal_cycle(toroid):
    """
    The diagonal pairing: (<i>, <i+r+1>) for i < r and (<i>, <i-r>) for
    r <= i < k, indices mod k.
    """
    toroid.require_odd()
    k, r = toroid.k, toroid.r
    pairs = []
    for i in range(k):
        j = i + r + 1 if i < r else i - r
        pairs.append((toroid.diagonal(i), toroid.diagonal(j)))
    return PairCycle(pairs)


class Certificate(object):
    """
    cert = Certificate(toroid, u, base, shifts, cycle)

    base   -- DelayAssignment of the unshifted execution
    shifts -- sequence of N ShiftMatrix
    cycle  -- PairCycle of length N
    """

    def __init__(self, toroid, u, base, shifts, cycle):
        self.toroid = toroid
        self.u = as_uncertainty(u)
        self.base = base
        self.shifts = list(shifts)
        self.cycle = cycle

    def __repr__(self):
        return 'Certificate(%r, u=%s, N=%d)' % (self.toroid, self.u, len(self.shifts))


class BoundReport(object):
    """
    Result of check_certificate.

    bound            -- certified lower bound on eps, None unless ok
    per_execution    -- list of (i, a_i, b_i, x^i_b - x^i_a)
    admissibility_ok -- every shifted assignment is admissible
    cancellation_ok  -- the pair cycle cancels
    violations       -- {i: [(edge, delay), ...]} for inadmissible executions
    failures         -- human readable list of failed checks
    """

    sign_convention = SIGN_CONVENTION

    def __init__(self, bound, per_execution, admissibility_ok, cancellation_ok,
                 violations=None, failures=None):
        self.bound = bound
        self.per_execution = per_execution
        self.admissibility_ok = admissibility_ok
        self.cancellation_ok = cancellation_ok
        self.violations = violations or {}
        self.failures = failures or []

    ok = property(lambda self: self.admissibility_ok and self.cancellation_ok
                  and not self.failures)
    total = property(lambda self: sum(c for _, _, _, c in self.per_execution))

    def __repr__(self):
        return 'BoundReport(bound=%s, ok=%s)' % (self.bound, self.ok)


def odd_certificate(toroid, u):
    """
    The certificate for an odd toroid: base delays of alpha, shifts
    x^0 ... x^{k-1} and the diagonal pair cycle.
    """
    toroid.require_odd()
    u = as_uncertainty(u)
    shifts = [shift_matrix(i, toroid, u) for i in range(toroid.k)]
    return Certificate(toroid, u, base_delays(toroid, u), shifts, diagonal_cycle(toroid))


paper_certificate = odd_certificate


def check_certificate(cert):
    """
    report = check_certificate(cert)

    Re-verifies a certificate from scratch: admissibility of every shifted
    delay assignment, cancellation of the pair cycle, and the bound
    (1/N) * sum_i (x^i_b - x^i_a).  Never raises for a bad certificate;
    failures are listed in the report.
    """
    failures = []
    toroid = cert.toroid
    n = len(cert.shifts)
    if n == 0:
        failures.append('certificate has no shift matrices')
    if len(cert.cycle) != n:
        failures.append('cycle has %d pairs but there are %d shift matrices' % (len(cert.cycle), n))
    if cert.base.toroid != toroid or cert.base.u != cert.u:
        failures.append('base delays do not match the certificate toroid/u')
    for i, x in enumerate(cert.shifts):
        if x.toroid != toroid:
            failures.append('shift %d lives on %r' % (i, x.toroid))

    processes = set(toroid.processes())
    stray = [(i, p) for i, pair in enumerate(cert.cycle) for p in pair if p not in processes]
    for i, p in stray:
        failures.append('pair %d names %r, not a process of %r' % (i, p, toroid))

    structural = bool(failures)
    violations = {}
    admissible = not structural
    if not structural:
        for i, x in enumerate(cert.shifts):
            ok, bad = is_admissible(apply_shift_to_delays(cert.base, x))
            if not ok:
                admissible = False
                violations[i] = bad
                failures.append('execution %d is not admissible (%d edges outside [0, u])' % (i, len(bad)))
    cancels = cert.cycle.cancels()
    if not cancels:
        failures.append('pair cycle does not cancel')

    per_execution = []
    if not structural:
        for i, ((a, b), x) in enumerate(zip(cert.cycle, cert.shifts)):
            per_execution.append((i, a, b, x.values[b] - x.values[a]))

    bound = None
    report = BoundReport(None, per_execution, admissible, cancels,
                         violations, failures)
    if report.ok:
        bound = report.total / n
        report.bound = bound
    log.info('checked %r: ok=%s bound=%s', cert, report.ok, bound)
    return report


if __name__ == '__main__':
    from pyshift.toroid import make_toroid
    t = make_toroid(5, 1)
    for i in range(t.k):
        print('W^%d =' % i, [str(w) for w in w_row(i, t, 1)])
    report = check_certificate(odd_certificate(t, 1))
    print('bound:', report.bound, 'contributions:', [str(c) for _, _, _, c in report.per_execution])
