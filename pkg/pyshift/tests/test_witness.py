from fractions import Fraction

import pytest

from pyshift.algorithms import reference_sync, silent
from pyshift.bounds import toroid_odd
from pyshift.toroid import make_toroid
from pyshift.witness import skew_witness

pytestmark = pytest.mark.filterwarnings('ignore::pyshift.simulator.TieWarning')

HALF = Fraction(1, 2)


def test_reference_five_ring():
    report = skew_witness(make_toroid(5, 1), 1, reference_sync())
    assert report.skews == [1, 1, 1, 1 + HALF, 1 + HALF]
    assert report.max_skew == Fraction(3, 2)
    assert report.bound == Fraction(6, 5)
    assert report.total == 6
    assert report.terminated
    assert report.holds


def test_silent_five_ring():
    report = skew_witness(make_toroid(5, 1), 1, silent())
    assert report.skews == [2, 1, 0, 1, 2]
    assert report.max_skew == 2
    assert report.holds


@pytest.mark.parametrize('k', [3, 5, 7])
@pytest.mark.parametrize('m', [1, 2])
@pytest.mark.parametrize('factory', [reference_sync, silent])
def test_bound_holds(k, m, factory):
    t = make_toroid(k, m)
    report = skew_witness(t, 1, factory())
    assert report.bound == toroid_odd(t, 1)
    assert report.max_skew >= report.bound
    assert report.total == len(report.rows) * report.bound
    assert all(row.admissible and row.indistinguishable for row in report.rows)


def test_scales_with_uncertainty():
    t = make_toroid(3, 1)
    u = Fraction(5, 3)
    report = skew_witness(t, u, reference_sync())
    assert report.bound == toroid_odd(t, u)
    assert report.max_skew >= report.bound
