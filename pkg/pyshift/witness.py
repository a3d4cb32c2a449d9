#!/usr/bin/env python
# encoding: utf-8
"""
witness.py

Exhibit the odd-toroid lower bound on a concrete algorithm.

The algorithm is run once in the base execution (hardware clocks all 0,
base delays).  Execution i is obtained by shifting that run by x^i, which
leaves every local history unchanged, so the algorithm ends with the same
adj everywhere while the hardware clocks become -x^i.  For the cycle pair
(a_i, b_i) the skew

    s_i = AC^i_{a_i} - AC^i_{b_i} = x^i_{b_i} - x^i_{a_i} + adj_{a_i} - adj_{b_i}

sums over the cycle to the certificate total, hence max_i s_i >= bound.
"""

import logging
from collections import namedtuple

from pyshift.certificate import check_certificate, odd_certificate
from pyshift.simulator import (MAX_EVENTS, HardwareClocks, adjusted_offset,
                               indistinguishable, run, shift_execution)

log = logging.getLogger(__name__)

WitnessRow = namedtuple('WitnessRow', 'index a b skew admissible indistinguishable')


class WitnessReport(object):
    """
    rows       -- WitnessRow per execution i
    bound      -- the certified bound of the certificate used
    base       -- ExecutionRecord of the base run
    terminated -- the base run terminated
    """

    def __init__(self, algorithm, rows, bound, base, hc):
        self.algorithm = algorithm
        self.rows = rows
        self.bound = bound
        self.base = base
        self.hc = hc

    skews = property(lambda self: [row.skew for row in self.rows])
    total = property(lambda self: sum(self.skews))
    max_skew = property(lambda self: max(self.skews))
    terminated = property(lambda self: self.base.terminated)

    def _get_holds(self):
        return (self.max_skew >= self.bound
                and all(row.admissible and row.indistinguishable for row in self.rows))

    holds = property(_get_holds)

    def __repr__(self):
        return 'WitnessReport(%s, max skew %s, bound %s)' % (self.algorithm, self.max_skew, self.bound)


def shifted_runs(record, hc, cert):
    'Yield (i, shifted record, shifted clocks) for every shift of cert.'
    for i, x in enumerate(cert.shifts):
        shifted, hc_i = shift_execution(record, hc, x)
        yield i, shifted, hc_i


def skew_witness(toroid, u, algorithm, max_events=MAX_EVENTS):
    """
    report = skew_witness(toroid, u, algorithm)

    Runs algorithm in the base execution of the odd toroid, shifts the run
    into every execution of the certificate and measures s_i per pair.
    """
    cert = odd_certificate(toroid, u)
    bound = check_certificate(cert).bound
    hc = HardwareClocks.zero(toroid)
    base = run(toroid, hc, cert.base, algorithm, max_events=max_events)
    rows = []
    for i, shifted, hc_i in shifted_runs(base, hc, cert):
        a, b = cert.cycle[i]
        skew = adjusted_offset(shifted, hc_i, a) - adjusted_offset(shifted, hc_i, b)
        rows.append(WitnessRow(i, a, b, skew, shifted.is_admissible(cert.u),
                               indistinguishable(base, shifted)))
    report = WitnessReport(algorithm.name, rows, bound, base, hc)
    log.info('%r', report)
    return report


if __name__ == '__main__':
    from pyshift.algorithms import reference_sync
    from pyshift.toroid import make_toroid
    report = skew_witness(make_toroid(5, 1), 1, reference_sync())
    for row in report.rows:
        print(row.index, row.a, row.b, row.skew)
    print('max', report.max_skew, '>=', report.bound, report.holds)
