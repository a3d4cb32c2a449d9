#!/usr/bin/env python
"""
Closed-form clock synchronization bounds for uniform uncertainty u.

    toroid-odd        u*m*(k - 1/k)/4     odd k, tight
    toroid-odd-prior  u*m*(k - 1)/4       odd k, the earlier lower bound
    toroid-even       u*m*k/4             even k
    mesh              u*m*(k - 1)/2
    clique            u*(1 - 1/n)         n >= 2 processes
"""

import numbers
from fractions import Fraction

from pyshift.rational import as_uncertainty
from pyshift.toroid import ParameterError, Toroid


def _km(params):
    if isinstance(params, Toroid):
        return params.k, params.m
    t = Toroid(*params)
    return t.k, t.m


def toroid_odd(params, u=1):
    k, m = _km(params)
    if k % 2 == 0:
        raise ParameterError('toroid-odd needs odd k, got k=%d' % k)
    return as_uncertainty(u) * m * (k * k - 1) / (4 * k)


def toroid_odd_prior(params, u=1):
    k, m = _km(params)
    if k % 2 == 0:
        raise ParameterError('toroid-odd-prior needs odd k, got k=%d' % k)
    return as_uncertainty(u) * m * (k - 1) / 4


def toroid_even(params, u=1):
    k, m = _km(params)
    if k % 2 == 1:
        raise ParameterError('toroid-even needs even k, got k=%d' % k)
    return as_uncertainty(u) * m * k / 4


def mesh(params, u=1):
    k, m = _km(params)
    return as_uncertainty(u) * m * (k - 1) / 2


def clique(n, u=1):
    if isinstance(n, bool) or not isinstance(n, numbers.Integral) or n < 2:
        raise ParameterError('clique needs an integer n >= 2, got %r' % (n,))
    return as_uncertainty(u) * (1 - Fraction(1, n))


VARIANTS = {'toroid-odd': toroid_odd,
            'toroid-odd-prior': toroid_odd_prior,
            'toroid-even': toroid_even,
            'mesh': mesh,
            'clique': clique}


def closed_form(variant, params, u=1):
    """
    value = closed_form(variant, params, u=1)

    params is a Toroid or a (k, m) pair, except for 'clique' where it is the
    process count n.  The value is an exact Fraction.
    """
    try:
        f = VARIANTS[variant]
    except KeyError:
        raise ParameterError('unknown variant %r, expected one of %s'
                             % (variant, ', '.join(sorted(VARIANTS))))
    return Fraction(f(params, u))


def gap(params, u=1):
    'Improvement of the tight odd-toroid bound over the prior one, u*m*(1 - 1/k)/4.'
    return closed_form('toroid-odd', params, u) - closed_form('toroid-odd-prior', params, u)


if __name__ == '__main__':
    for k in (3, 5, 7, 9):
        print(k, closed_form('toroid-odd', (k, 1)), closed_form('toroid-odd-prior', (k, 1)), gap((k, 1)))
