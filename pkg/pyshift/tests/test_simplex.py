from fractions import Fraction

import pytest

from pyshift.simplex import LinearProgram, SolverError, solve_lp, solve_lp_approx


def make_lp(names, rows, objective):
    lp = LinearProgram()
    for name in names:
        lp.add_variable(name)
    for coeffs, sense, rhs in rows:
        lp.add_constraint(coeffs, sense, rhs)
    lp.set_objective(objective)
    return lp


class TestSolve(object):
    def setup_method(self, method):
        self.plane = make_lp('xy', [({'x': 1, 'y': 2}, '<=', 4), ({'x': 3, 'y': 1}, '<=', 6)],
                             {'x': 1, 'y': 1})

    def test_single_variable(self):
        solution = solve_lp(make_lp('x', [({'x': 1}, '<=', 1)], {'x': 1}))
        assert solution.status == 'optimal'
        assert solution.objective_value == 1 and solution.assignment == {'x': 1}

    def test_plane(self):
        solution = solve_lp(self.plane)
        assert solution.objective_value == Fraction(14, 5)
        assert solution.assignment == {'x': Fraction(8, 5), 'y': Fraction(6, 5)}
        assert self.plane.violations(solution.assignment) == []

    def test_deterministic(self):
        assert solve_lp(self.plane) == solve_lp(self.plane)

    def test_unbounded(self):
        solution = solve_lp(make_lp('xy', [({'x': 1, 'y': -1}, '<=', 1)], {'x': 1}))
        assert solution.status == 'unbounded' and solution.objective_value is None

    def test_infeasible(self):
        solution = solve_lp(make_lp('x', [({'x': 1}, '>=', 2), ({'x': 1}, '<=', 1)], {'x': 1}))
        assert solution.status == 'infeasible'

    def test_equality_rows(self):
        lp = make_lp('xy', [({'x': 1, 'y': 1}, '==', 3), ({'x': 1}, '<=', 1)], {'x': 2, 'y': 1})
        solution = solve_lp(lp)
        assert solution.objective_value == 4
        assert solution.assignment == {'x': 1, 'y': 2}

    def test_negative_right_hand_side(self):
        lp = make_lp('x', [({'x': -1}, '<=', -1), ({'x': 1}, '<=', 5)], {'x': -1})
        assert solve_lp(lp).objective_value == -1

    def test_degenerate_problem_terminates(self):
        lp = make_lp(['x4', 'x5', 'x6', 'x7'],
                     [({'x4': Fraction(1, 4), 'x5': -8, 'x6': -1, 'x7': 9}, '<=', 0),
                      ({'x4': Fraction(1, 2), 'x5': -12, 'x6': Fraction(-1, 2), 'x7': 3}, '<=', 0),
                      ({'x6': 1}, '<=', 1)],
                     {'x4': Fraction(3, 4), 'x5': -20, 'x6': Fraction(1, 2), 'x7': -6})
        assert solve_lp(lp).objective_value == Fraction(5, 4)

    def test_pivot_cap(self):
        with pytest.raises(SolverError):
            solve_lp(self.plane, max_pivots=0)

    def test_zero_objective(self):
        solution = solve_lp(make_lp('x', [({'x': 1}, '<=', 1)], {}))
        assert solution.status == 'optimal' and solution.objective_value == 0


class TestLinearProgram(object):
    def test_definition_errors(self):
        lp = LinearProgram()
        lp.add_variable('x')
        with pytest.raises(ValueError):
            lp.add_variable('x')
        with pytest.raises(ValueError):
            lp.add_constraint({'y': 1}, '<=', 0)
        with pytest.raises(ValueError):
            lp.add_constraint({'x': 1}, '<', 0)
        with pytest.raises(TypeError):
            lp.add_constraint({'x': 0.5}, '<=', 0)

    def test_violations(self):
        lp = make_lp('x', [({'x': 1}, '<=', 1)], {'x': 1})
        assert lp.violations({'x': 2}) == [lp.constraints[0]]
        assert lp.violations({'x': -1}) == ['x']
        assert lp.evaluate({'x': Fraction(1, 3)}) == Fraction(1, 3)


class TestApprox(object):
    def test_matches_exact(self):
        pytest.importorskip('scipy')
        lp = make_lp('xy', [({'x': 1, 'y': 2}, '<=', 4), ({'x': 3, 'y': 1}, '<=', 6)], {'x': 1, 'y': 1})
        assert solve_lp_approx(lp) == pytest.approx(2.8)
