from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from pyshift.algorithms import ReferenceSync, reference_sync, silent, spanning_tree
from pyshift.certificate import shift_matrix
from pyshift.delays import DelayAssignment, ShiftMatrix, apply_shift_to_delays, base_delays
from pyshift.simulator import (Algorithm, HardwareClocks, SimulationError, SimulationWarning,
                               TieWarning, adjusted_offset, indistinguishable, max_skew, run,
                               shift_execution)
from pyshift.toroid import ParameterError, Port, make_toroid

pytestmark = pytest.mark.filterwarnings('ignore::pyshift.simulator.TieWarning')

HALF = Fraction(1, 2)


def uniform_delays(t, u, value):
    shape = (t.m,) + t.shape
    full = np.empty(shape, dtype=object)
    full.fill(Fraction(value))
    return DelayAssignment(t, u, full, full)


class Chatty(Algorithm):
    'Keeps sending on port 0 forever.'

    def on_start(self, state, reading):
        return state, [(Port(0, True), 'ping')]

    def on_receive(self, state, edge, payload, reading):
        return state, [(Port(0, True), 'ping')], None


class BadPort(Algorithm):
    def on_start(self, state, reading):
        return state, [(Port(5, True), 'lost')]


class NeverDone(Algorithm):
    def terminated(self, state):
        return False


class TestRun(object):
    def setup_method(self, method):
        self.ring = make_toroid(5, 1)
        self.hc = HardwareClocks.zero(self.ring)
        self.base = base_delays(self.ring, 1)

    def test_silent(self):
        rec = run(self.ring, self.hc, self.base, silent())
        assert rec.message_log == []
        assert rec.adj.tolist() == [0] * 5
        assert all(rec.local_view(p) == [(('start',), 0)] for p in self.ring.processes())
        assert rec.terminated

    def test_reference_sync_five_ring(self):
        rec = run(self.ring, self.hc, self.base, reference_sync())
        assert rec.terminated
        assert len(rec.message_log) == 4 * 1 * 5
        assert rec.adj.tolist() == [0, HALF, 1, 1, HALF]
        assert rec.is_admissible(1)
        assert run(self.ring, self.hc, self.base, reference_sync()) == rec

    def test_records_ties(self):
        with pytest.warns(TieWarning):
            rec = run(self.ring, self.hc, self.base, reference_sync())
        assert rec.ties
        for p in self.ring.processes():
            readings = [r for _, r in rec.local_view(p)]
            assert readings == sorted(readings)

    def test_messages_match_receipts(self):
        rec = run(self.ring, self.hc, self.base, reference_sync())
        receipts = Counter((e.event[1], e.event[2], e.time) for h in rec.histories.values()
                           for e in h if e.event[0] == 'receive')
        sent = Counter((m.edge, m.payload, m.receive_time) for m in rec.message_log)
        assert receipts == sent
        for edge, delay in rec.delays():
            assert delay == self.base[edge]

    def test_constant_clock_offset(self):
        rec = run(self.ring, self.hc, self.base, reference_sync())
        later = run(self.ring, HardwareClocks.constant(self.ring, Fraction(7, 2)), self.base,
                    reference_sync())
        assert indistinguishable(rec, later)
        assert later.histories[(3,)][0].time == Fraction(-7, 2)

    def test_two_processes(self):
        t = make_toroid(2, 1)
        rec = run(t, HardwareClocks.zero(t), uniform_delays(t, 1, HALF), reference_sync())
        assert rec.adj.tolist() == [0, 0]
        assert rec.terminated and len(rec.message_log) == 8

    def test_exact_estimates_synchronize(self):
        hc = HardwareClocks(self.ring, [0, 3, -1, Fraction(5, 2), 7])
        rec = run(self.ring, hc, uniform_delays(self.ring, 1, HALF), reference_sync())
        assert rec.terminated
        assert max_skew(rec, hc) == 0
        assert all(adjusted_offset(rec, hc, p) == 0 for p in self.ring.processes())

    def test_event_cap(self):
        with pytest.raises(SimulationError):
            run(self.ring, self.hc, self.base, Chatty(), max_events=50)

    def test_bad_port(self):
        with pytest.raises(SimulationError):
            run(self.ring, self.hc, self.base, BadPort())

    def test_negative_delay(self):
        with pytest.raises(SimulationError):
            run(self.ring, self.hc, lambda edge, t, n: -1, reference_sync(), u=1)

    def test_oracle_needs_u(self):
        with pytest.raises(ParameterError):
            run(self.ring, self.hc, lambda edge, t, n: 0, reference_sync())

    def test_oracle(self):
        rec = run(self.ring, self.hc, lambda edge, t, n: self.base[edge], reference_sync(), u=1)
        assert rec == run(self.ring, self.hc, self.base, reference_sync())

    def test_quiescence_warning(self):
        with pytest.warns(SimulationWarning):
            rec = run(self.ring, self.hc, self.base, NeverDone())
        assert not rec.terminated


class TestShiftExecution(object):
    def setup_method(self, method):
        self.ring = make_toroid(5, 1)
        self.hc = HardwareClocks.zero(self.ring)
        self.base = base_delays(self.ring, 1)
        self.rec = run(self.ring, self.hc, self.base, reference_sync())

    def test_zero_shift(self):
        shifted, hc = shift_execution(self.rec, self.hc, ShiftMatrix.zero(self.ring))
        assert shifted == self.rec and hc == self.hc

    def test_alpha_one(self):
        x = shift_matrix(1, self.ring, 1)
        shifted, hc = shift_execution(self.rec, self.hc, x)
        assert hc.tolist() == [0, 0, -1, -1, -1]
        before = dict((m.payload, d) for m, (e, d) in zip(self.rec.message_log, self.rec.delays())
                      if e.source == (1,) and e.target == (2,))
        after = dict((m.payload, d) for m, (e, d) in zip(shifted.message_log, shifted.delays())
                     if e.source == (1,) and e.target == (2,))
        assert before and all(after[k] == before[k] + 1 for k in before)
        assert shifted.is_admissible(1)

    def test_delays_change_by_receiver_minus_sender(self):
        x = ShiftMatrix(self.ring, [Fraction(1, 3), 0, -2, 5, Fraction(-7, 4)])
        shifted, hc = shift_execution(self.rec, self.hc, x)
        assert hc == HardwareClocks(self.ring, (self.hc - x).values)
        for (e, d0), (_, d1) in zip(self.rec.delays(), shifted.delays()):
            assert d1 - d0 == x[e.target] - x[e.source]

    def test_plain_sequences(self):
        x = ShiftMatrix(self.ring, [0, 0, 1, 1, 1])
        shifted, hc = shift_execution(self.rec, [0] * 5, [0, 0, 1, 1, 1])
        assert (shifted, hc) == shift_execution(self.rec, self.hc, x)
        assert isinstance(hc, HardwareClocks)

    def test_inverse_shift(self):
        x = ShiftMatrix(self.ring, [1, 2, 3, 4, Fraction(1, 9)])
        shifted, hc = shift_execution(self.rec, self.hc, x)
        back, hc_back = shift_execution(shifted, hc, -x)
        assert back == self.rec and hc_back == self.hc

    def test_indistinguishable(self):
        assert indistinguishable(self.rec, self.rec)
        for i in range(5):
            shifted, _ = shift_execution(self.rec, self.hc, shift_matrix(i, self.ring, 1))
            assert indistinguishable(self.rec, shifted)
        other = run(self.ring, self.hc, uniform_delays(self.ring, 1, HALF), reference_sync())
        assert not indistinguishable(self.rec, other)

    def test_direct_run_in_shifted_world(self):
        d = uniform_delays(self.ring, 1, HALF)
        rec = run(self.ring, self.hc, d, reference_sync())
        x = ShiftMatrix(self.ring, [0, Fraction(1, 8), Fraction(-1, 8), Fraction(1, 4), 0])
        shifted, hc = shift_execution(rec, self.hc, x)
        direct = run(self.ring, hc, apply_shift_to_delays(d, x), reference_sync())
        assert direct.histories == shifted.histories
        assert direct.adj == shifted.adj
        assert Counter(direct.message_log) == Counter(shifted.message_log)


class TestSpanningTree(object):
    def test_five_ring(self):
        tree = spanning_tree(make_toroid(5, 1))
        assert tree == {(0,): None, (1,): Port(0, False), (4,): Port(0, True),
                        (2,): Port(0, False), (3,): Port(0, True)}

    def test_covers_every_process(self):
        t = make_toroid(3, 2)
        tree = spanning_tree(t)
        assert sorted(tree) == t.processes()
        for p, port in tree.items():
            if port is not None:
                parent = t.edge(p, port).target
                depth = sum(min(c, 3 - c) for c in p)
                assert sum(min(c, 3 - c) for c in parent) == depth - 1

    def test_tree_is_cached(self):
        alg = ReferenceSync()
        t = make_toroid(3, 1)
        assert alg.tree(t) is alg.tree(make_toroid(3, 1))
