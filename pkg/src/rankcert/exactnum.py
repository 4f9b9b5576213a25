"""Exact integer and rational helpers.

Python's ``int`` is already an arbitrary-precision integer and
``fractions.Fraction`` is always kept in lowest terms with a positive
denominator, so both are used directly as the big-integer and rational
types of this package.  This module adds the few number-theoretic helpers
the degree formulas need, plus strict decimal parsing used by the file
formats.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

BigInt = int
Rational = Fraction

RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def factorial(n: int) -> int:
    """Return ``n!`` exactly."""
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def p2_valuation(n: int) -> int:
    """Return the largest ``k`` with ``2**k`` dividing ``n``.

    >>> p2_valuation(12)
    2
    """
    if n <= 0:
        raise ValueError(f"2-adic valuation needs a positive integer, got {n}")
    # lowest set bit
    return (n & -n).bit_length() - 1


def gcd(a: int, b: int) -> int:
    """Nonnegative greatest common divisor, with ``gcd(0, 0) == 0``."""
    return math.gcd(a, b)


def parse_rational(text: RationalLike) -> Fraction:
    """Parse ``"-123"`` or ``"7/33"`` (or pass through an int/Fraction).

    Floats are rejected: nothing in the certification path may be inexact.
    """
    if isinstance(text, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise TypeError(f"expected an integer, Fraction or decimal string, got {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: RationalLike) -> str:
    """Inverse of :func:`parse_rational`: ``"n"`` or ``"n/d"`` in lowest terms."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def content(values) -> int:
    """gcd of an iterable of integers (0 for an empty or all-zero input)."""
    return math.gcd(*values)


def lcm_of_denominators(values) -> int:
    """Least common multiple of the denominators of some rationals."""
    out = 1
    for v in values:
        out = math.lcm(out, Fraction(v).denominator)
    return out
