from fractions import Fraction

import pytest

from pyshift.bounds import VARIANTS, closed_form, gap
from pyshift.toroid import ParameterError, make_toroid


class TestClosedForm(object):
    def test_cited_values(self):
        assert closed_form('toroid-odd', (5, 1), 1) == Fraction(6, 5)
        assert closed_form('toroid-odd', (3, 2), 1) == Fraction(4, 3)
        assert closed_form('toroid-even', (4, 1), 1) == 1
        assert closed_form('clique', 2, 1) == Fraction(1, 2)
        assert closed_form('mesh', (3, 2), 1) == 2

    def test_accepts_toroids_and_literals(self):
        assert closed_form('toroid-odd', make_toroid(9, 3), '7/3') == Fraction(140, 9)

    def test_odd_formula(self):
        for k in (3, 5, 7, 9):
            for m in (1, 2, 3):
                for u in (1, Fraction(1, 2), Fraction(7, 3)):
                    assert closed_form('toroid-odd', (k, m), u) == Fraction(u) * m * (k * k - 1) / (4 * k)

    def test_prior_bound_and_gap(self):
        assert closed_form('toroid-odd-prior', (5, 1), 1) == 1
        assert gap((5, 1), 1) == Fraction(1, 5)
        for k in (3, 5, 7, 9):
            assert gap((k, 2), 3) == Fraction(3 * 2, 4) * (1 - Fraction(1, k))

    def test_parity_errors(self):
        for variant, params in (('toroid-odd', (4, 1)), ('toroid-odd-prior', (6, 2)),
                                ('toroid-even', (5, 1))):
            with pytest.raises(ParameterError):
                closed_form(variant, params, 1)

    def test_bad_inputs(self):
        with pytest.raises(ParameterError):
            closed_form('clique', 1, 1)
        with pytest.raises(ParameterError):
            closed_form('hypercube', (2, 3), 1)
        with pytest.raises(ValueError):
            closed_form('mesh', (3, 1), 0)

    def test_variants(self):
        assert sorted(VARIANTS) == ['clique', 'mesh', 'toroid-even', 'toroid-odd', 'toroid-odd-prior']
