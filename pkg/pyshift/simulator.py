#!/usr/bin/env python
# encoding: utf-8
"""
simulator.py

A deterministic discrete-event simulator for clock synchronization on a
toroid, and the shift transformation on whole executions.

Process p owns a drift-free hardware clock HC_p(t) = t + c_p.  It gets one
start event at reading 0 and one receive event per incoming message, and it
sees hardware readings only, never real time.  Every message on an edge is
delayed by that edge's entry of a DelayAssignment (or by a delay oracle
callable).  Simultaneous events are ordered by

    (real time, receiver, start before receive, sender, send sequence number)

Readings in a history are nondecreasing; receipts at one reading are kept in
that order and the record lists them in record.ties.
"""

import heapq
import logging
import warnings
from collections import namedtuple

from pyshift.delays import DelayAssignment, ProcessMatrix, ShiftMatrix
from pyshift.rational import as_rational, as_uncertainty
from pyshift.toroid import ParameterError

log = logging.getLogger(__name__)

MAX_EVENTS = 100000

START = ('start',)


class SimulationError(RuntimeError):
    """The event cap was reached, or a delay or port was invalid."""


class SimulationWarning(UserWarning):
    pass


class TieWarning(SimulationWarning):
    """Several events of one process happened at the same hardware reading."""


class HardwareClocks(ProcessMatrix):
    """Per-process hardware clock offsets c_p, HC_p(t) = t + c_p."""

    def reading(self, p, t):
        return as_rational(t) + self[p]


HistoryEntry = namedtuple('HistoryEntry', 'event reading time')

MessageRecord = namedtuple('MessageRecord', 'edge send_time receive_time payload')


class Adjustments(ProcessMatrix):
    """Final values of the adj variables."""


class ExecutionRecord(object):
    """
    The outcome of a run.

    histories   -- {process: [HistoryEntry(event, reading, time), ...]}
                   event is ('start',) or ('receive', edge, payload)
    adj         -- Adjustments, the adj variables after termination
    message_log -- [MessageRecord(edge, send_time, receive_time, payload)]
                   in send order
    ties        -- [(process, reading)] for every repeated reading
    terminated  -- every process declared termination
    """

    def __init__(self, toroid, histories, adj, message_log, ties=(), terminated=True):
        self.toroid = toroid
        self.histories = histories
        self.adj = adj
        self.message_log = list(message_log)
        self.ties = list(ties)
        self.terminated = terminated

    def local_view(self, p):
        'The (event, reading) pairs of p, the part of a history p can observe.'
        return [(e.event, e.reading) for e in self.histories[p]]

    def delays(self):
        'List of (edge, delay) per logged message.'
        return [(m.edge, m.receive_time - m.send_time) for m in self.message_log]

    def is_admissible(self, u):
        u = as_uncertainty(u)
        return all(0 <= d <= u for _, d in self.delays())

    nevents = property(lambda self: sum(len(h) for h in self.histories.values()))

    def __eq__(self, other):
        return (isinstance(other, ExecutionRecord) and other.toroid == self.toroid
                and other.histories == self.histories and other.adj == self.adj
                and other.message_log == self.message_log)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return 'ExecutionRecord(%r, %d events, %d messages)' % (self.toroid, self.nevents,
                                                                len(self.message_log))


class Algorithm(object):
    """
    Base class of a clock synchronization algorithm.

    Transitions see the process state, the event and the hardware reading;
    messages are (Port, payload) pairs.  Returning None as the adjustment
    leaves adj unchanged.  Payloads must compare exactly with ==.
    """

    name = 'algorithm'

    def initial_state(self, toroid, pid, u):
        return {'pid': pid}

    def on_start(self, state, reading):
        return state, []

    def on_receive(self, state, edge, payload, reading):
        return state, [], None

    def terminated(self, state):
        return True

    def __repr__(self):
        return '%s()' % type(self).__name__


def _delay_oracle(delays):
    if isinstance(delays, DelayAssignment):
        return lambda edge, send_time, seq: delays[edge]
    if callable(delays):
        return delays
    raise TypeError('delays must be a DelayAssignment or a callable, got %s' % type(delays))


def run(toroid, hc, delays, algorithm, u=None, max_events=MAX_EVENTS):
    """
    record = run(toroid, hc, delays, algorithm, u=None, max_events=100000)

    hc is a HardwareClocks (or anything ProcessMatrix accepts), delays a
    DelayAssignment or a callable oracle (edge, send_time, seq) -> delay.
    u defaults to delays.u.  Runs to quiescence; raises SimulationError
    after max_events events.
    """
    if not isinstance(hc, HardwareClocks):
        hc = HardwareClocks(toroid, hc.values if isinstance(hc, ProcessMatrix) else hc)
    if hc.toroid != toroid:
        raise ParameterError('hardware clocks on %r, run on %r' % (hc.toroid, toroid))
    if u is None:
        if not isinstance(delays, DelayAssignment):
            raise ParameterError('u is required with a delay oracle')
        u = delays.u
    u = as_uncertainty(u)
    oracle = _delay_oracle(delays)

    processes = toroid.processes()
    index = dict((p, n) for n, p in enumerate(processes))
    states = dict((p, algorithm.initial_state(toroid, p, u)) for p in processes)
    adj = dict((p, as_rational(0)) for p in processes)
    histories = dict((p, []) for p in processes)
    seq = dict((p, 0) for p in processes)
    pending = {}
    sent = []
    received = {}
    ties = []
    queue = []

    for p in processes:
        heapq.heappush(queue, (-hc[p], index[p], 0, -1, 0))

    def send(p, t, messages):
        for port, payload in messages:
            try:
                edge = toroid.edge(p, port)
            except (ParameterError, TypeError, ValueError):
                raise SimulationError('%r sent on an invalid port %r' % (p, port))
            n = seq[p]
            delay = as_rational(oracle(edge, t, n))
            if delay < 0:
                raise SimulationError('negative delay %s on %r' % (delay, edge))
            seq[p] = n + 1
            pending[(index[p], n)] = (edge, t, payload)
            sent.append((index[p], n, edge, t, payload))
            heapq.heappush(queue, (t + delay, index[edge.target], 1, index[p], n))

    nevents = 0
    while queue:
        t, receiver, rank, sender, n = heapq.heappop(queue)
        nevents += 1
        if nevents > max_events:
            raise SimulationError('no quiescence after %d events' % max_events)
        p = processes[receiver]
        reading = hc.reading(p, t)
        if rank == 0:
            event = START
            states[p], messages = algorithm.on_start(states[p], reading)
        else:
            edge, send_time, payload = pending.pop((sender, n))
            received[(sender, n)] = t
            event = ('receive', edge, payload)
            states[p], messages, new_adj = algorithm.on_receive(states[p], edge, payload, reading)
            if new_adj is not None:
                adj[p] = as_rational(new_adj)
        history = histories[p]
        if history and history[-1].reading == reading:
            ties.append((p, reading))
        history.append(HistoryEntry(event, reading, t))
        send(p, t, messages)

    message_log = [MessageRecord(edge, send_time, received[(i, n)], payload)
                   for i, n, edge, send_time, payload in sent]
    terminated = all(algorithm.terminated(states[p]) for p in processes)
    log.debug('%r on %r: %d events, %d messages', algorithm, toroid, nevents, len(message_log))
    if ties:
        warnings.warn('%d events recorded at a hardware reading already in the history'
                      % len(ties), TieWarning, stacklevel=2)
    if not terminated:
        warnings.warn('quiescent before every process terminated', SimulationWarning, stacklevel=2)
    return ExecutionRecord(toroid, histories, Adjustments(toroid, adj), message_log,
                           ties, terminated)


def shift_execution(record, hc, x):
    """
    shifted, hc_shifted = shift_execution(record, hc, x)

    Retimes every event of p by +x_p.  Readings are unchanged, so the new
    clocks are c_p - x_p, and the delay of each message changes by
    x_receiver - x_sender.
    """
    toroid = record.toroid
    if not isinstance(hc, HardwareClocks):
        hc = HardwareClocks(toroid, hc.values if isinstance(hc, ProcessMatrix) else hc)
    if not isinstance(x, ProcessMatrix):
        x = ShiftMatrix(toroid, x)
    if x.toroid != toroid or hc.toroid != toroid:
        raise ParameterError('record, clocks and shift matrix live on different toroids')
    histories = dict((p, [HistoryEntry(e.event, e.reading, e.time + x[p]) for e in h])
                     for p, h in record.histories.items())
    message_log = [MessageRecord(m.edge, m.send_time + x[m.edge.source],
                                 m.receive_time + x[m.edge.target], m.payload)
                   for m in record.message_log]
    shifted = ExecutionRecord(toroid, histories, record.adj, message_log,
                              record.ties, record.terminated)
    return shifted, HardwareClocks(toroid, hc.values - x.values)


def indistinguishable(r1, r2):
    'Same (event, reading) sequence at every process and the same adj values.'
    if r1.toroid != r2.toroid:
        raise ParameterError('records live on different toroids')
    return (r1.adj == r2.adj and
            all(r1.local_view(p) == r2.local_view(p) for p in r1.toroid.processes()))


def adjusted_offset(record, hc, p):
    'AC_p(t) - t after termination, c_p + adj_p.'
    return hc[p] + record.adj[p]


def max_skew(record, hc):
    'Largest difference between two adjusted clocks after termination.'
    offsets = [adjusted_offset(record, hc, p) for p in record.toroid.processes()]
    return max(offsets) - min(offsets)


if __name__ == '__main__':
    from pyshift.algorithms import reference_sync
    from pyshift.delays import base_delays
    from pyshift.toroid import make_toroid
    t = make_toroid(5, 1)
    hc = HardwareClocks.zero(t)
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', TieWarning)
        rec = run(t, hc, base_delays(t, 1), reference_sync())
    print(rec)
    print('adj', [str(a) for a in rec.adj.tolist()], 'skew', max_skew(rec, hc))
