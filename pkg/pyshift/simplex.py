#!/usr/bin/env python
# encoding: utf-8
"""
simplex.py

A small exact linear programming solver.

    lp = LinearProgram()
    lp.add_variable('x')
    lp.add_constraint({'x': 1}, '<=', 1)
    lp.set_objective({'x': 1})
    solve_lp(lp)    ->  LpSolution(status='optimal', objective_value=Fraction(1, 1), ...)

Problems are maximizations over nonnegative variables.  The solver is a
two-phase primal simplex on a dense numpy object tableau of Fractions, with
Bland's rule for both the entering and the leaving variable, so it is exact,
deterministic and cannot cycle.  solve_lp_approx hands the same problem to
scipy.optimize.linprog for a floating point cross-check.
"""

import logging
from collections import namedtuple
from fractions import Fraction

import numpy as np

from pyshift.rational import as_rational

log = logging.getLogger(__name__)

SENSES = ('<=', '>=', '==')


class SolverError(RuntimeError):
    """The solver hit its pivot cap or produced a point that fails its own self-check."""


Constraint = namedtuple('Constraint', 'coeffs sense rhs label')

LpSolution = namedtuple('LpSolution', 'status objective_value assignment pivots')


class LinearProgram(object):
    """
    maximize   sum_j objective[j] * v_j
    subject to every constraint, v_j >= 0 for all j.

    Variables are addressed by name; coefficients are exact rationals.
    """

    def __init__(self):
        self.variables = []
        self._index = {}
        self.constraints = []
        self.objective = {}

    def add_variable(self, name):
        if name in self._index:
            raise ValueError('variable %r already defined' % (name,))
        self._index[name] = len(self.variables)
        self.variables.append(name)
        return name

    def _coeffs(self, coeffs):
        out = {}
        for name, a in coeffs.items():
            if name not in self._index:
                raise ValueError('unknown variable %r' % (name,))
            a = as_rational(a)
            if a != 0:
                out[name] = out.get(name, Fraction(0)) + a
        return out

    def add_constraint(self, coeffs, sense, rhs, label=None):
        if sense not in SENSES:
            raise ValueError('sense must be one of %s, got %r' % (SENSES, sense))
        c = Constraint(self._coeffs(coeffs), sense, as_rational(rhs), label)
        self.constraints.append(c)
        return c

    def set_objective(self, coeffs):
        self.objective = self._coeffs(coeffs)

    nvars = property(lambda self: len(self.variables))
    nrows = property(lambda self: len(self.constraints))

    def evaluate(self, assignment, coeffs=None):
        'Value of a linear functional (default the objective) at assignment.'
        coeffs = self.objective if coeffs is None else coeffs
        return sum((a * assignment.get(name, 0) for name, a in coeffs.items()), Fraction(0))

    def violations(self, assignment):
        'Constraints (and sign conditions) that assignment breaks, exactly.'
        bad = [name for name in self.variables if assignment.get(name, 0) < 0]
        for c in self.constraints:
            lhs = self.evaluate(assignment, c.coeffs)
            if ((c.sense == '<=' and lhs > c.rhs) or (c.sense == '>=' and lhs < c.rhs)
                    or (c.sense == '==' and lhs != c.rhs)):
                bad.append(c)
        return bad

    def __repr__(self):
        return 'LinearProgram(%d variables, %d constraints)' % (self.nvars, self.nrows)


def _pivot(T, basis, row, col):
    T[row] = T[row] / T[row, col]
    column = T[:, col].copy()
    column[row] = 0
    nz = np.nonzero(np.asarray(column != 0, dtype=bool))[0]
    if len(nz):
        T[nz] -= np.outer(column[nz], T[row])
    basis[row] = col


def _iterate(T, basis, columns, max_pivots, pivots):
    """
    Bland's rule on T until optimal or unbounded.  The last row of T holds
    the reduced costs of the maximization and its objective value.
    """
    nrows = len(basis)
    while True:
        z = T[-1]
        entering = next((j for j in columns if z[j] < 0), None)
        if entering is None:
            return 'optimal', pivots
        ratios = [(T[i, -1] / T[i, entering], basis[i], i)
                  for i in range(nrows) if T[i, entering] > 0]
        if not ratios:
            return 'unbounded', pivots
        _, _, leaving = min(ratios)
        _pivot(T, basis, leaving, entering)
        pivots += 1
        if max_pivots is not None and pivots > max_pivots:
            raise SolverError('no optimum after %d pivots' % max_pivots)


def solve_lp(lp, max_pivots=None):
    """
    solution = solve_lp(lp, max_pivots=None)

    Exact two-phase simplex.  solution.status is 'optimal', 'unbounded' or
    'infeasible'; on 'optimal' the assignment maps every variable name to a
    Fraction and has been re-checked against every constraint.
    """
    n = lp.nvars
    rows = []
    for c in lp.constraints:
        a = np.empty(n, dtype=object)
        a.fill(Fraction(0))
        for name, v in c.coeffs.items():
            a[lp._index[name]] = v
        sense, b = c.sense, c.rhs
        if b < 0:
            a, b = -a, -b
            sense = {'<=': '>=', '>=': '<=', '==': '=='}[sense]
        rows.append((a, sense, b))

    nslack = sum(1 for _, s, _ in rows if s != '==')
    nart = sum(1 for _, s, _ in rows if s != '<=')
    ncols = n + nslack + nart
    nrows = len(rows)
    T = np.empty((nrows + 1, ncols + 1), dtype=object)
    T.fill(Fraction(0))
    basis = [None] * nrows
    artificial = []
    s, t = n, n + nslack
    for i, (a, sense, b) in enumerate(rows):
        T[i, :n] = a
        T[i, -1] = b
        if sense == '<=':
            T[i, s] = Fraction(1)
            basis[i] = s
            s += 1
        else:
            if sense == '>=':
                T[i, s] = Fraction(-1)
                s += 1
            T[i, t] = Fraction(1)
            basis[i] = t
            artificial.append(t)
            t += 1

    log.debug('tableau %d x %d, %d artificial variables', nrows, ncols, nart)
    pivots = 0
    if artificial:
        T[-1, artificial] = Fraction(1)
        for i, j in enumerate(basis):
            if j in artificial:
                T[-1] -= T[i]
        status, pivots = _iterate(T, basis, range(ncols), max_pivots, pivots)
        if T[-1, -1] < 0:
            log.info('phase 1 ended with infeasibility %s', -T[-1, -1])
            return LpSolution('infeasible', None, {}, pivots)
        art = set(artificial)
        for i, j in enumerate(basis):
            if j in art:
                k = next((k for k in range(n + nslack) if T[i, k] != 0), None)
                if k is not None:
                    _pivot(T, basis, i, k)
                    pivots += 1
        log.debug('phase 1 done after %d pivots', pivots)

    T[-1] = Fraction(0)
    for name, v in lp.objective.items():
        T[-1, lp._index[name]] = -v
    for i, j in enumerate(basis):
        if T[-1, j] != 0:
            T[-1] -= T[-1, j] * T[i]
    status, pivots = _iterate(T, basis, range(n + nslack), max_pivots, pivots)
    log.debug('phase 2 %s after %d pivots', status, pivots)
    if status == 'unbounded':
        return LpSolution('unbounded', None, {}, pivots)

    values = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            values[j] = T[i, -1]
    assignment = dict(zip(lp.variables, values))
    value = T[-1, -1]
    bad = lp.violations(assignment)
    if bad or lp.evaluate(assignment) != value:
        raise SolverError('optimal point fails self-check: %d violated constraints' % len(bad))
    log.info('%r: optimum %s after %d pivots', lp, value, pivots)
    return LpSolution('optimal', value, assignment, pivots)


def solve_lp_approx(lp):
    """
    Approximate optimum via scipy.optimize.linprog, a float (or None when
    scipy does not report success).  For cross-checking only.
    """
    from scipy.optimize import linprog

    def dense(coeffs):
        row = np.zeros(lp.nvars)
        for name, v in coeffs.items():
            row[lp._index[name]] = float(v)
        return row

    A_ub, b_ub, A_eq, b_eq = [], [], [], []
    for c in lp.constraints:
        if c.sense == '<=':
            A_ub.append(dense(c.coeffs))
            b_ub.append(float(c.rhs))
        elif c.sense == '>=':
            A_ub.append(-dense(c.coeffs))
            b_ub.append(-float(c.rhs))
        else:
            A_eq.append(dense(c.coeffs))
            b_eq.append(float(c.rhs))
    res = linprog(-dense(lp.objective),
                  A_ub=np.array(A_ub) if A_ub else None, b_ub=b_ub or None,
                  A_eq=np.array(A_eq) if A_eq else None, b_eq=b_eq or None,
                  bounds=(0, None), method='highs')
    if res.status != 0:
        log.info('linprog status %d: %s', res.status, res.message)
        return None
    return -res.fun


if __name__ == '__main__':
    lp = LinearProgram()
    for v in ('x', 'y'):
        lp.add_variable(v)
    lp.add_constraint({'x': 1, 'y': 2}, '<=', 4)
    lp.add_constraint({'x': 3, 'y': 1}, '<=', 6)
    lp.set_objective({'x': 1, 'y': 1})
    print(solve_lp(lp))
    print('approx', solve_lp_approx(lp))
