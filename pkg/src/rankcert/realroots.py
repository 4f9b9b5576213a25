"""Counting real roots with Sturm sequences.

Everything is done on integer coefficient lists (low degree first).  The
remainder sequence uses primitive pseudo-remainders whose sign is fixed up
so that each element is a *positive* multiple of the classical Sturm
remainder; signs at +-infinity are read off leading coefficients and degree
parity, so no polynomial is ever evaluated numerically.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .poly import Polynomial, dehomogenize

IntPoly = list  # low-to-high integer coefficients, no trailing zeros


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _primitive(p: Sequence[int]) -> list[int]:
    p = _trim(list(p))
    if not p:
        return p
    g = math.gcd(*p)
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def _to_int_poly(f: Polynomial | Sequence) -> list[int]:
    """Primitive integer coefficients of a univariate polynomial."""
    if isinstance(f, Polynomial):
        coeffs = f.univariate_coefficients()
    else:
        coeffs = [Fraction(c) for c in f]
    coeffs = _trim(list(coeffs))
    if not coeffs:
        return []
    den = 1
    for c in coeffs:
        den = math.lcm(den, Fraction(c).denominator)
    return _primitive([int(Fraction(c) * den) for c in coeffs])


def _derivative(p: Sequence[int]) -> list[int]:
    return [i * p[i] for i in range(1, len(p))]


def _prem(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Pseudo-remainder ``lc(b)^(deg a - deg b + 1) * a mod b``."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    delta = len(a) - len(b) + 1
    steps = 0
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        r.pop()  # leading term cancels
        _trim(r)
        steps += 1
    # account for skipped steps so the multiplier is exactly lb**delta
    if steps < delta:
        r = [c * lb ** (delta - steps) for c in r]
    return r


def _gcd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    a = _primitive(a)
    b = _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _primitive(_prem(a, b))
        a, b = b, r
    return _primitive(a)


def _exact_div(a: Sequence[int], b: Sequence[int]) -> list[Fraction]:
    """Quotient of ``a / b`` over the rationals; asserts zero remainder."""
    r = [Fraction(c) for c in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    db = len(b) - 1
    while len(r) - 1 >= db and r:
        coef = r[-1] / b[-1]
        shift = len(r) - 1 - db
        q[shift] = coef
        for i, c in enumerate(b):
            r[i + shift] -= coef * c
        r.pop()
        _trim(r)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def squarefree_part_coeffs(p: Sequence[int]) -> list[int]:
    p = _primitive(p)
    if not p:
        raise ValueError("the zero polynomial has no squarefree part")
    if len(p) <= 2:
        return p
    g = _gcd(p, _derivative(p))
    if len(g) == 1:
        return p
    return _to_int_poly(_exact_div(p, g))


def squarefree_part(f: Polynomial) -> Polynomial:
    """``f / gcd(f, f')`` made primitive with positive leading coefficient."""
    coeffs = squarefree_part_coeffs(_to_int_poly(f))
    return Polynomial.from_univariate(coeffs, f.variables[0])


def sturm_sequence_coeffs(p: Sequence[int]) -> list[list[int]]:
    """Sturm sequence of a squarefree integer polynomial.

    Element ``i+1`` is a positive multiple of ``-rem(p_{i-1}, p_i)``.
    """
    p = _primitive(p)
    seq = [p]
    if len(p) <= 1:
        return seq
    seq.append(_primitive(_derivative(p)))
    while len(seq[-1]) > 1:
        a, b = seq[-2], seq[-1]
        r = _prem(a, b)
        if not r:
            break
        delta = len(a) - len(b) + 1
        # prem = lc(b)^delta * rem; keep the sign of -rem
        negate = not (b[-1] < 0 and delta % 2 == 1)
        g = math.gcd(*r)
        r = [(-c if negate else c) // g for c in r]
        seq.append(r)
    return seq


def sturm_sequence(f: Polynomial) -> list[Polynomial]:
    var = f.variables[0]
    seq = sturm_sequence_coeffs(squarefree_part_coeffs(_to_int_poly(f)))
    return [Polynomial.from_univariate(s, var) for s in seq]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _signs_at_infinity(seq, positive: bool) -> list[int]:
    out = []
    for s in seq:
        sg = _sign(s[-1])
        if not positive and (len(s) - 1) % 2 == 1:
            sg = -sg
        out.append(sg)
    return out


def _eval(p: Sequence[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def count_real_roots(f: Polynomial | Sequence) -> int:
    """Number of distinct real roots of a nonzero univariate polynomial."""
    p = _to_int_poly(f)
    if not p:
        raise ValueError("the zero polynomial has infinitely many roots")
    seq = sturm_sequence_coeffs(squarefree_part_coeffs(p))
    return _variations(_signs_at_infinity(seq, False)) - _variations(_signs_at_infinity(seq, True))


def count_roots_in_interval(f: Polynomial | Sequence, lo=None, hi=None) -> int:
    """Distinct real roots in ``(lo, hi]``; ``None`` means -inf / +inf.

    Finite endpoints must be rationals.
    """
    p = _to_int_poly(f)
    if not p:
        raise ValueError("the zero polynomial has infinitely many roots")
    seq = sturm_sequence_coeffs(squarefree_part_coeffs(p))
    if lo is None:
        v_lo = _variations(_signs_at_infinity(seq, False))
    else:
        v_lo = _variations([_sign(_eval(s, Fraction(lo))) for s in seq])
    if hi is None:
        v_hi = _variations(_signs_at_infinity(seq, True))
    else:
        v_hi = _variations([_sign(_eval(s, Fraction(hi))) for s in seq])
    return v_lo - v_hi


def homogeneous_has_nonzero_real_root(F: Polynomial) -> bool:
    """Does the binary form ``F(a, b)`` vanish at some real ``(a, b) != 0``?

    Points with ``b != 0`` scale to ``b = 1`` and are found by Sturm
    counting on ``F(a, 1)``; the remaining direction ``(1, 0)`` is a root
    exactly when the coefficient of ``a^deg F`` vanishes.
    """
    if len(F.variables) != 2:
        raise ValueError(f"expected a bivariate form, got variables {F.variables}")
    if F.is_zero():
        raise ValueError("the zero form vanishes everywhere")
    if not F.is_homogeneous():
        raise ValueError("polynomial is not homogeneous")
    d = int(F.degree())
    if F.coefficient((d, 0)) == 0:
        return True
    return count_real_roots(dehomogenize(F, F.variables[1])) > 0
