from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rankcert.exactnum import (
    content,
    factorial,
    format_rational,
    lcm_of_denominators,
    p2_valuation,
    parse_rational,
)


def test_factorial_small():
    assert [factorial(k) for k in range(6)] == [1, 1, 2, 6, 24, 120]
    with pytest.raises(ValueError):
        factorial(-1)


@given(st.integers(1, 10**30))
def test_p2_valuation_matches_repeated_division(n):
    k, m = 0, n
    while m % 2 == 0:
        m //= 2
        k += 1
    assert p2_valuation(n) == k


@pytest.mark.parametrize("n,k", [(1, 0), (12, 2), (1024, 10), (3 * 2**40, 40)])
def test_p2_valuation_examples(n, k):
    assert p2_valuation(n) == k


@pytest.mark.parametrize("bad", [0, -4])
def test_p2_valuation_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        p2_valuation(bad)


@given(st.fractions())
def test_rational_text_roundtrip(q):
    assert parse_rational(format_rational(q)) == q


def test_parse_rational_forms():
    assert parse_rational("-123") == -123
    assert parse_rational(" 7/33 ") == Fraction(7, 33)
    assert parse_rational("14/4") == Fraction(7, 2)
    assert format_rational(Fraction(-14, 4)) == "-7/2"


@pytest.mark.parametrize("bad", ["1.5", "1e3", "x", "", "1/"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_parse_rational_rejects_inexact_types():
    with pytest.raises(TypeError):
        parse_rational(0.5)
    with pytest.raises(TypeError):
        parse_rational(True)
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


@given(st.lists(st.integers(-1000, 1000), max_size=6))
def test_content_is_gcd(xs):
    assert content(xs) == math.gcd(*xs)


def test_lcm_of_denominators():
    assert lcm_of_denominators([Fraction(1, 4), Fraction(5, 6), 3]) == 12
