"""Exact rational helpers.

All times, delays, shifts and bounds in pyshift are fractions.Fraction.
Floats are refused on input; decimals only appear on output and are always
labelled approximate.
"""

import numbers
import re
from fractions import Fraction

_literal = re.compile(r'^\s*[+-]?\d+(\s*/\s*\d+)?\s*$')


def as_rational(value):
    """Return value as an exact Fraction.

    Accepts Fraction, int, any numbers.Rational and the string literals
    'num/den' or 'int'.  Floats are rejected since they are not exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError('booleans are not rationals')
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        if not _literal.match(value):
            raise ValueError("'%s' is not a rational literal (use num/den or an integer)" % value)
        num, _, den = value.replace(' ', '').partition('/')
        if den and int(den) == 0:
            raise ValueError("'%s' has a zero denominator" % value)
        return Fraction(int(num), int(den) if den else 1)
    if isinstance(value, float):
        raise TypeError('float %r is not exact; pass a Fraction or a "num/den" string' % value)
    raise TypeError('type %s not supported' % type(value))


def as_uncertainty(u):
    'Return the uniform uncertainty u as a Fraction, u > 0.'
    u = as_rational(u)
    if u <= 0:
        raise ValueError('uncertainty u must be positive, got %s' % u)
    return u


def fmt(value):
    """Canonical text of an exact rational: '6/5', '-3', '0'."""
    return str(as_rational(value))


def approx(value, digits=6):
    'Decimal rendering of a rational, for display only.'
    return '%.*g' % (digits, float(as_rational(value)))
