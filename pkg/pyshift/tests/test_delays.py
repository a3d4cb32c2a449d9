from fractions import Fraction

import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings

from pyshift.delays import (DelayAssignment, ShiftMatrix, apply_shift_to_delays, base_delays,
                            is_admissible, reverse_complement_check)
from pyshift.toroid import ParameterError, make_toroid

SHAPES = [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2)]

FRACTIONS = st.fractions(min_value=-5, max_value=5, max_denominator=12)

SETTINGS = settings(derandomize=True, max_examples=120, deadline=None,
                    suppress_health_check=[HealthCheck.too_slow])


@st.composite
def shift_pairs(draw):
    'A sampled toroid with two shift matrices on it.'
    t = make_toroid(*draw(st.sampled_from(SHAPES)))
    entries = st.lists(FRACTIONS, min_size=t.nprocs, max_size=t.nprocs)
    x = ShiftMatrix(t, dict(zip(t.processes(), draw(entries))))
    y = ShiftMatrix(t, dict(zip(t.processes(), draw(entries))))
    return t, x, y


def forward_row(d, h=0):
    return [d.forward_delay(p, h) for p in d.toroid.processes()]


def reverse_row(d, h=0):
    return [d.reverse_delay(p, h) for p in d.toroid.processes()]


class TestBaseDelays(object):
    def setup_method(self, method):
        self.ring = make_toroid(5, 1)

    def test_five_ring(self):
        d = base_delays(self.ring, 1)
        assert forward_row(d) == [0, 0, 1, 1, 1]
        assert reverse_row(d) == [1, 1, 0, 0, 0]
        assert is_admissible(d).ok

    def test_three_ring(self):
        d = base_delays(make_toroid(3, 1), 1)
        assert forward_row(d) == [0, 1, 1]
        assert reverse_row(d) == [1, 0, 0]

    def test_per_dimension_rule(self):
        t = make_toroid(3, 2)
        d = base_delays(t, 1)
        for p in t.processes():
            for h in range(2):
                assert d.forward_delay(p, h) == (0 if p[h] == 0 else 1)

    def test_exact_fractions(self):
        d = base_delays(self.ring, Fraction(7, 3))
        assert all(type(v) is Fraction for v in d.forward.flat)
        assert d[((2,), (3,), 0, True)] == Fraction(7, 3)

    def test_rejects_even_k(self):
        with pytest.raises(ParameterError):
            base_delays(make_toroid(4, 1), 1)

    def test_rejects_bad_u(self):
        with pytest.raises(ValueError):
            base_delays(self.ring, 0)
        with pytest.raises(TypeError):
            base_delays(self.ring, 0.5)


class TestApplyShift(object):
    def setup_method(self, method):
        self.ring = make_toroid(5, 1)
        self.base = base_delays(self.ring, 1)

    def test_alpha_one(self):
        shifted = apply_shift_to_delays(self.base, ShiftMatrix(self.ring, [0, 0, 1, 1, 1]))
        assert forward_row(shifted) == [0, 1, 1, 1, 0]
        assert is_admissible(shifted).ok

    def test_zero_and_constant_shifts(self):
        assert apply_shift_to_delays(self.base, ShiftMatrix.zero(self.ring)) == self.base
        assert apply_shift_to_delays(self.base, ShiftMatrix.constant(self.ring, Fraction(5, 2))) == self.base

    def test_violations(self):
        shifted = apply_shift_to_delays(self.base, ShiftMatrix(self.ring, [0, 0, 3, 0, 0]))
        ok, violations = is_admissible(shifted)
        assert not ok
        assert [(e.source, e.target, d) for e, d in violations] == [((1,), (2,), 3), ((2,), (1,), -2),
                                                                    ((2,), (3,), -2), ((3,), (2,), 3)]

    def test_topology_mismatch(self):
        with pytest.raises(ParameterError):
            apply_shift_to_delays(self.base, ShiftMatrix.zero(make_toroid(3, 1)))


class TestShiftProperties(object):
    'Shifting laws over sampled toroid shapes and rational shift matrices.'

    @SETTINGS
    @given(shift_pairs())
    def test_composition(self, case):
        t, x, y = case
        d = base_delays(t, Fraction(3, 2))
        assert apply_shift_to_delays(apply_shift_to_delays(d, x), y) == apply_shift_to_delays(d, x + y)

    @SETTINGS
    @given(shift_pairs())
    def test_inverse(self, case):
        t, x, _ = case
        d = base_delays(t, 1)
        assert apply_shift_to_delays(apply_shift_to_delays(d, x), -x) == d

    @SETTINGS
    @given(shift_pairs(), FRACTIONS)
    def test_constant_offset_is_invisible(self, case, c):
        t, x, _ = case
        d = base_delays(t, 1)
        assert apply_shift_to_delays(d, x + ShiftMatrix.constant(t, c)) == apply_shift_to_delays(d, x)

    @SETTINGS
    @given(shift_pairs())
    def test_antisymmetry(self, case):
        t, x, _ = case
        d = base_delays(t, 1)
        shifted = apply_shift_to_delays(d, x)
        for e in t.directed_edges():
            change = shifted[e] - d[e]
            assert change == -(shifted[e.reverse] - d[e.reverse])
            assert change == x[e.target] - x[e.source]

    @SETTINGS
    @given(shift_pairs())
    def test_reverse_complement_preserved(self, case):
        t, x, _ = case
        d = base_delays(t, Fraction(7, 3))
        assert reverse_complement_check(apply_shift_to_delays(d, x))


class TestDelayAssignment(object):
    def setup_method(self, method):
        self.t = make_toroid(3, 1)

    def test_reverse_complement_fails_on_zero_delays(self):
        zeros = np.zeros((1, 3), dtype=int)
        assert not reverse_complement_check(DelayAssignment(self.t, 1, zeros, zeros))

    def test_from_mapping(self):
        base = base_delays(self.t, 1)
        d = DelayAssignment.from_mapping(self.t, 1, dict(base.items()))
        assert d == base
        mapping = dict(base.items())
        del mapping[self.t.directed_edges()[0]]
        with pytest.raises(ParameterError):
            DelayAssignment.from_mapping(self.t, 1, mapping)

    def test_with_delay(self):
        base = base_delays(self.t, 1)
        e = self.t.directed_edges()[1]
        d = base.with_delay(e, 2)
        assert d[e] == 2 and base[e] == 1
        assert not is_admissible(d).ok

    def test_rows(self):
        rows = base_delays(self.t, 1).rows()
        assert rows[0] == ((0,), (1,), 0, 0)
        assert len(rows) == 6

    def test_rejects_floats_and_bad_shapes(self):
        with pytest.raises(TypeError):
            DelayAssignment(self.t, 1, [[0.5, 0, 0]], [[0, 0, 0]])
        with pytest.raises(ParameterError):
            DelayAssignment(self.t, 1, [0, 0, 0], [0, 0, 0])
        with pytest.raises(ParameterError):
            ShiftMatrix(self.t, {(0,): 1})
