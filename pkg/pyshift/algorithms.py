#!/usr/bin/env python
# encoding: utf-8
"""
algorithms.py

Concrete clock synchronization algorithms for the simulator.

reference_sync -- two message waves over a breadth-first spanning tree
silent         -- sends nothing, adj stays 0
"""

from collections import deque
from fractions import Fraction

from pyshift.simulator import Algorithm
from pyshift.toroid import Port


def spanning_tree(toroid):
    """
    tree = spanning_tree(toroid)

    Breadth-first tree rooted at <0,...,0>, exploring ports in port order.
    tree[p] is the port of p that leads to its parent; None for the root.
    """
    root = toroid.diagonal(0)
    tree = {root: None}
    frontier = deque([root])
    while frontier:
        p = frontier.popleft()
        for port, q in toroid.neighbors(p):
            if q not in tree:
                tree[q] = Port(port.dim, not port.forward)
                frontier.append(q)
    return tree


class ReferenceSync(Algorithm):
    """
    Every process sends ('probe', reading) on every port at start.  A
    process estimates its offset to its tree parent from the probe arriving
    on the parent port as R - S - u/2 (R own reading, S the parent's send
    reading).  The root starts a second wave ('offset', 0); a process adds
    its estimate to the parent's offset, sets adj to minus the sum and
    floods ('offset', sum) on every port.  Done once the offset is known
    and a probe and an offset arrived on every port.
    """

    name = 'reference'

    def __init__(self):
        self._trees = {}

    def tree(self, toroid):
        if toroid not in self._trees:
            self._trees[toroid] = spanning_tree(toroid)
        return self._trees[toroid]

    def initial_state(self, toroid, pid, u):
        return {'pid': pid,
                'ports': toroid.ports(),
                'parent_port': self.tree(toroid)[pid],
                'half_u': Fraction(u) / 2,
                'est': None,
                'parent_offset': None,
                'offset': None,
                'probes': 0,
                'offsets': 0}

    def _flood(self, state, payload):
        return [(port, payload) for port in state['ports']]

    def on_start(self, state, reading):
        messages = self._flood(state, ('probe', reading))
        if state['parent_port'] is None:
            state['offset'] = Fraction(0)
            messages += self._flood(state, ('offset', state['offset']))
        return state, messages

    def on_receive(self, state, edge, payload, reading):
        kind, value = payload
        arrived_on = edge.reverse.port
        from_parent = arrived_on == state['parent_port']
        if kind == 'probe':
            state['probes'] += 1
            if from_parent:
                state['est'] = reading - value - state['half_u']
        elif kind == 'offset':
            state['offsets'] += 1
            if from_parent:
                state['parent_offset'] = value
        if (state['offset'] is None and state['est'] is not None
                and state['parent_offset'] is not None):
            state['offset'] = state['est'] + state['parent_offset']
            return state, self._flood(state, ('offset', state['offset'])), -state['offset']
        return state, [], None

    def terminated(self, state):
        n = len(state['ports'])
        return state['offset'] is not None and state['probes'] == n and state['offsets'] == n


class Silent(Algorithm):
    """No messages; adj stays 0."""

    name = 'silent'


def reference_sync():
    return ReferenceSync()


def silent():
    return Silent()


ALGORITHMS = {'reference': reference_sync,
              'silent': silent}


def make_algorithm(name):
    try:
        return ALGORITHMS[name]()
    except KeyError:
        raise ValueError('unknown algorithm %r, expected one of %s'
                         % (name, ', '.join(sorted(ALGORITHMS))))
