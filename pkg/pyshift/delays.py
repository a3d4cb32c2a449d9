#!/usr/bin/env python
# encoding: utf-8
"""
delays.py

Delay assignments, shift matrices and the shift transformation on delays.

A shift matrix x retimes every event of process p by x_p.  The delay of a
message from p to q then becomes delay - x_p + x_q, and the hardware clock of
p becomes HC_p - x_p.  Everything here is exact: entries are Fractions held
in numpy object arrays, and equality is exact equality.

Layout of a DelayAssignment: two object arrays of shape (m,) + (k,)*m,

    forward[h][p] -- delay of p -> successor(p, h)
    reverse[h][p] -- delay of successor(p, h) -> p

so neighbor access along dimension h is numpy.roll(..., -1, axis=h).
"""

from collections import namedtuple
from fractions import Fraction

import numpy as np

from pyshift.rational import as_rational, as_uncertainty
from pyshift.toroid import Toroid, ParameterError


def _object_array(shape, fill=Fraction(0)):
    a = np.empty(shape, dtype=object)
    a.fill(fill)
    return a


class ProcessMatrix(object):
    """
    An m-dimensional matrix of exact rationals indexed by process ids.

    values may be an array-like of shape (k,)*m, or a dict {process: value}
    that names every process exactly once (ParameterError otherwise).
    values=None gives the zero matrix.
    """

    def __init__(self, toroid, values=None):
        if not isinstance(toroid, Toroid):
            raise TypeError('toroid must be a Toroid, got %s' % type(toroid))
        self.toroid = toroid
        a = _object_array(toroid.shape)
        if isinstance(values, dict):
            for p, v in values.items():
                a[toroid.check_process(p)] = as_rational(v)
            if len(set(toroid.check_process(p) for p in values)) != toroid.nprocs:
                raise ParameterError('%s needs exactly one entry per process' % type(self).__name__)
        elif values is not None:
            src = np.asarray(values, dtype=object)
            if src.shape != toroid.shape:
                raise ParameterError('%s shape %s does not match toroid shape %s'
                                     % (type(self).__name__, src.shape, toroid.shape))
            for idx in np.ndindex(*toroid.shape):
                a[idx] = as_rational(src[idx])
        self.values = a

    def __getitem__(self, p):
        return self.values[self.toroid.check_process(p)]

    def items(self):
        'Pairs (process, value) in lexicographic process order.'
        return [(p, self.values[p]) for p in self.toroid.processes()]

    def tolist(self):
        'Values in lexicographic process order.'
        return [self.values[p] for p in self.toroid.processes()]

    def _check(self, other):
        if not isinstance(other, ProcessMatrix) or other.toroid != self.toroid:
            raise ParameterError('process matrices live on different toroids')

    def __add__(self, other):
        self._check(other)
        return type(self)(self.toroid, self.values + other.values)

    def __sub__(self, other):
        self._check(other)
        return type(self)(self.toroid, self.values - other.values)

    def __neg__(self):
        return type(self)(self.toroid, -self.values)

    def __eq__(self, other):
        return (isinstance(other, ProcessMatrix) and other.toroid == self.toroid
                and all(a == b for a, b in zip(self.values.flat, other.values.flat)))

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return '%s(%r, %s)' % (type(self).__name__, self.toroid,
                               [str(v) for v in self.tolist()])

    @classmethod
    def zero(cls, toroid):
        return cls(toroid)

    @classmethod
    def constant(cls, toroid, c):
        a = _object_array(toroid.shape, as_rational(c))
        return cls(toroid, a)


class ShiftMatrix(ProcessMatrix):
    """Per-process real-time shift amounts x_p."""


class DelayAssignment(object):
    """
    d = DelayAssignment(toroid, u, forward, reverse)

    A fixed delay per directed edge: every message on an edge has the same
    delay.  forward and reverse are array-likes of shape (m,) + (k,)*m (see
    module docstring).  Use from_mapping to build one from {edge: delay}.
    """

    def __init__(self, toroid, u, forward, reverse):
        self.toroid = toroid
        self.u = as_uncertainty(u)
        shape = (toroid.m,) + toroid.shape
        self.forward = _object_array(shape)
        self.reverse = _object_array(shape)
        for name, src, dst in (('forward', forward, self.forward),
                               ('reverse', reverse, self.reverse)):
            src = np.asarray(src, dtype=object)
            if src.shape != shape:
                raise ParameterError('%s delays have shape %s, expected %s' % (name, src.shape, shape))
            for idx in np.ndindex(*shape):
                dst[idx] = as_rational(src[idx])

    @classmethod
    def from_mapping(cls, toroid, u, mapping):
        """Build from {DirectedEdge: delay}; every edge exactly once."""
        shape = (toroid.m,) + toroid.shape
        forward = _object_array(shape, None)
        reverse = _object_array(shape, None)
        seen = set()
        for edge, delay in mapping.items():
            e = toroid.check_edge(edge)
            if e in seen:
                raise ParameterError('edge %r has more than one delay' % (e,))
            seen.add(e)
            if e.forward:
                forward[(e.dim,) + e.source] = as_rational(delay)
            else:
                reverse[(e.dim,) + e.target] = as_rational(delay)
        missing = [e for e in toroid.directed_edges() if e not in seen]
        if missing:
            raise ParameterError('%d edges have no delay, first %r' % (len(missing), missing[0]))
        return cls(toroid, u, forward, reverse)

    def __getitem__(self, edge):
        e = self.toroid.check_edge(edge)
        if e.forward:
            return self.forward[(e.dim,) + e.source]
        return self.reverse[(e.dim,) + e.target]

    def forward_delay(self, p, h):
        'Delay of p -> successor(p, h).'
        return self.forward[(self.toroid.check_dim(h),) + self.toroid.check_process(p)]

    def reverse_delay(self, p, h):
        'Delay of successor(p, h) -> p.'
        return self.reverse[(self.toroid.check_dim(h),) + self.toroid.check_process(p)]

    def items(self):
        'Pairs (edge, delay) in canonical edge order.'
        return [(e, self[e]) for e in self.toroid.directed_edges()]

    def rows(self):
        'Tuples (source, target, dim, delay) in canonical edge order.'
        return [(e.source, e.target, e.dim, d) for e, d in self.items()]

    def with_delay(self, edge, delay):
        'A copy with one edge delay replaced.'
        e = self.toroid.check_edge(edge)
        forward, reverse = self.forward.copy(), self.reverse.copy()
        if e.forward:
            forward[(e.dim,) + e.source] = as_rational(delay)
        else:
            reverse[(e.dim,) + e.target] = as_rational(delay)
        return DelayAssignment(self.toroid, self.u, forward, reverse)

    def __eq__(self, other):
        return (isinstance(other, DelayAssignment) and other.toroid == self.toroid
                and other.u == self.u
                and all(a == b for a, b in zip(self.forward.flat, other.forward.flat))
                and all(a == b for a, b in zip(self.reverse.flat, other.reverse.flat)))

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return 'DelayAssignment(%r, u=%s)' % (self.toroid, self.u)


Admissibility = namedtuple('Admissibility', 'ok violations')


def base_delays(toroid, u):
    """
    The delays of the base execution alpha on an odd toroid, k = 2r+1.

    For q = successor(p, h): delay(p -> q) is 0 if p_h < r and u otherwise;
    delay(q -> p) = u - delay(p -> q).
    """
    toroid.require_odd()
    u = as_uncertainty(u)
    coords = np.indices(toroid.shape)
    forward = np.where(coords < toroid.r, Fraction(0), u).astype(object)
    return DelayAssignment(toroid, u, forward, u - forward)


def apply_shift_to_delays(d, x):
    """
    Delays after shifting by x: every p -> q delay becomes
    delay - x_p + x_q.  The result need not be admissible.
    """
    if d.toroid != x.toroid:
        raise ParameterError('delay assignment on %r, shift matrix on %r' % (d.toroid, x.toroid))
    forward = d.forward.copy()
    reverse = d.reverse.copy()
    for h in range(d.toroid.m):
        x_next = np.roll(x.values, -1, axis=h)
        forward[h] = d.forward[h] - x.values + x_next
        reverse[h] = d.reverse[h] - x_next + x.values
    return DelayAssignment(d.toroid, d.u, forward, reverse)


def is_admissible(d):
    """
    ok, violations = is_admissible(d)

    ok is True iff every delay lies in [0, u].  violations lists
    (edge, delay) for each offending edge in canonical edge order.
    """
    bad_f = np.asarray((d.forward < 0) | (d.forward > d.u), dtype=bool)
    bad_r = np.asarray((d.reverse < 0) | (d.reverse > d.u), dtype=bool)
    if not bad_f.any() and not bad_r.any():
        return Admissibility(True, [])
    violations = [(e, v) for e, v in d.items() if v < 0 or v > d.u]
    return Admissibility(False, violations)


def reverse_complement_check(d):
    'True iff delay(q -> p) == u - delay(p -> q) on every adjacency.'
    return all(v == d.u for v in (d.forward + d.reverse).flat)


if __name__ == '__main__':
    from pyshift.toroid import make_toroid
    t = make_toroid(5, 1)
    d = base_delays(t, 1)
    x = ShiftMatrix(t, [0, 0, 1, 1, 1])
    print('alpha   forward:', [str(v) for v in d.forward[0]])
    print('alpha^1 forward:', [str(v) for v in apply_shift_to_delays(d, x).forward[0]])
    print('admissible:', is_admissible(apply_shift_to_delays(d, x)).ok)
