#!/usr/bin/env python
# encoding: utf-8
"""
toroid.py

k-ary m-toroids: m-dimensional grids with k processes per dimension and
wraparound.  Process ids are m-tuples of coordinates mod k, enumerated in
lexicographic order.  Every adjacency carries two directed edges, one in the
forward direction (coordinate + 1 mod k) and one backward.
"""

import itertools
import numbers
from collections import namedtuple


class ParameterError(ValueError):
    """Toroid parameters, coordinates, dimensions or indices out of range."""


Port = namedtuple('Port', 'dim forward')


class DirectedEdge(namedtuple('DirectedEdge', 'source target dim forward')):
    """
    A directed link of the toroid.

    source, target -- process ids differing only in coordinate dim
    forward        -- True iff target[dim] == source[dim] + 1 mod k

    For k == 2 the two directions of one dimension reach the same neighbor,
    so the forward flag is part of the edge identity.
    """
    __slots__ = ()

    @property
    def reverse(self):
        return DirectedEdge(self.target, self.source, self.dim, not self.forward)

    @property
    def port(self):
        'The outgoing port of source that this edge leaves on.'
        return Port(self.dim, self.forward)


class Toroid(object):
    """
    t = Toroid(k, m)

    A k-ary m-toroid with k**m processes.  Instances are immutable values
    and compare equal when k and m match.

    Attributes:
        k, m     -- ary and dimension count
        r        -- (k-1)/2 for odd k, None otherwise
        shape    -- (k,)*m, the shape of any per-process matrix
        nprocs   -- k**m
    """

    def __init__(self, k, m):
        if isinstance(k, bool) or not isinstance(k, numbers.Integral) or k < 2:
            raise ParameterError('k must be an integer >= 2, got %r' % (k,))
        if isinstance(m, bool) or not isinstance(m, numbers.Integral) or m < 1:
            raise ParameterError('m must be an integer >= 1, got %r' % (m,))
        self._k = int(k)
        self._m = int(m)
        self._processes = tuple(itertools.product(range(self._k), repeat=self._m))
        self._index = dict((p, n) for n, p in enumerate(self._processes))

    k = property(lambda self: self._k)
    m = property(lambda self: self._m)
    shape = property(lambda self: (self._k,) * self._m)
    nprocs = property(lambda self: len(self._processes))
    odd = property(lambda self: self._k % 2 == 1)

    def _get_r(self):
        if not self.odd:
            return None
        return (self._k - 1) // 2

    r = property(_get_r)

    def require_odd(self):
        'Raise ParameterError unless k = 2r+1 with r >= 1.'
        if not self.odd or self._k < 3:
            raise ParameterError('k must be odd and at least 3, got k=%d' % self._k)

    def processes(self):
        'All process ids in lexicographic order.'
        return list(self._processes)

    def process_index(self, p):
        return self._index[self.check_process(p)]

    def check_process(self, p):
        'Return p as a tuple of ints after range checking.'
        try:
            p = tuple(int(c) for c in p)
        except TypeError:
            raise ParameterError('process id must be a sequence of %d coordinates, got %r' % (self._m, p))
        if p not in self._index:
            raise ParameterError('process %r is not a process of %r' % (p, self))
        return p

    def check_dim(self, h):
        if isinstance(h, bool) or not isinstance(h, numbers.Integral) or not 0 <= h < self._m:
            raise ParameterError('dimension must be in [0, %d), got %r' % (self._m, h))
        return int(h)

    def successor(self, p, h):
        'Neighbor of p with coordinate h increased by one mod k.'
        p = self.check_process(p)
        h = self.check_dim(h)
        return p[:h] + ((p[h] + 1) % self._k,) + p[h+1:]

    def predecessor(self, p, h):
        'Neighbor of p with coordinate h decreased by one mod k.'
        p = self.check_process(p)
        h = self.check_dim(h)
        return p[:h] + ((p[h] - 1) % self._k,) + p[h+1:]

    def ports(self):
        'Port order used everywhere: dim 0 forward, dim 0 backward, dim 1 forward, ...'
        return [Port(h, fwd) for h in range(self._m) for fwd in (True, False)]

    def edge(self, p, port):
        'The directed edge leaving p on the given port.'
        dim, forward = port
        if forward:
            return DirectedEdge(self.check_process(p), self.successor(p, dim), dim, True)
        return DirectedEdge(self.check_process(p), self.predecessor(p, dim), dim, False)

    def neighbors(self, p):
        'List of (port, neighbor) pairs in port order.'
        return [(port, self.edge(p, port).target) for port in self.ports()]

    def check_edge(self, edge):
        'Raise ParameterError unless edge is a directed edge of this toroid.'
        try:
            source, target, dim, forward = edge
        except (TypeError, ValueError):
            raise ParameterError('not a directed edge: %r' % (edge,))
        if self.edge(source, Port(dim, bool(forward))) != (tuple(source), tuple(target), dim, bool(forward)):
            raise ParameterError('%r is not an edge of %r' % (edge, self))
        return DirectedEdge(tuple(source), tuple(target), dim, bool(forward))

    def directed_edges(self):
        """
        Every directed edge exactly once, in canonical order: for each
        process p (lexicographic) and dimension h, the forward edge
        p -> successor(p, h) followed by its reverse.  Length 2*m*k**m.
        """
        edges = []
        for p in self._processes:
            for h in range(self._m):
                e = self.edge(p, Port(h, True))
                edges.append(e)
                edges.append(e.reverse)
        return edges

    def diagonal(self, i):
        'The diagonal process <i, ..., i>, i taken mod k.'
        return (i % self._k,) * self._m

    def __eq__(self, other):
        return isinstance(other, Toroid) and (self._k, self._m) == (other._k, other._m)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(('Toroid', self._k, self._m))

    def __repr__(self):
        return 'Toroid(k=%d, m=%d)' % (self._k, self._m)


def make_toroid(k, m):
    'Return the k-ary m-toroid; k >= 2, m >= 1.'
    return Toroid(k, m)


if __name__ == '__main__':
    t = make_toroid(5, 1)
    print(t, t.nprocs, 'processes,', len(t.directed_edges()), 'directed edges')
    for e in t.directed_edges():
        print('  %s -> %s  dim=%d forward=%s' % e)
