"""Dimension, degree and parity of determinantal varieties, and the
minimal-measurement bounds built from them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import factorial, p2_valuation

VARIANTS = ("general", "symmetric", "weak-recovery")
FIELDS = ("real", "complex")


@dataclass(frozen=True)
class ProblemSpec:
    n: int
    r: int
    variant: str = "general"
    field: str = "real"

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}; expected one of {VARIANTS}")
        if self.field not in FIELDS:
            raise ValueError(f"unknown field {self.field!r}; expected one of {FIELDS}")
        if self.r < 1:
            raise ValueError(f"rank bound must be at least 1, got {self.r}")
        if 2 * self.r > self.n:
            raise ValueError(f"recovery results need r <= n/2, got n={self.n}, r={self.r}")


TIGHT = "TightByTheorem"
NOT_TIGHT = "KnownNotTight"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class TightnessVerdict:
    value: str
    citation: str = ""

    def __post_init__(self):
        if self.value not in (TIGHT, NOT_TIGHT, UNKNOWN):
            raise ValueError(f"bad tightness value {self.value!r}")
        if self.value != UNKNOWN and not self.citation:
            raise ValueError("a definite tightness verdict needs a citation")


def _check_range(n: int, r: int):
    if n < 0 or r < 0 or r > n:
        raise ValueError(f"need 0 <= r <= n, got n={n}, r={r}")


def dim_lowrank(n: int, r: int, variant: str = "general") -> int:
    """Affine dimension of the n x n matrices of rank at most r.

    ``"symmetric"`` gives the symmetric ones: C(n+1, 2) - C(n-r+1, 2).
    ``"weak-recovery"`` is treated like ``"general"``.
    """
    _check_range(n, r)
    if variant == "symmetric":
        return math.comb(n + 1, 2) - math.comb(n - r + 1, 2)
    if variant in ("general", "weak-recovery"):
        return 2 * n * r - r * r
    raise ValueError(f"unknown variant {variant!r}")


def degree_determinantal(n: int, r: int) -> int:
    """Degree of the variety of n x n matrices of rank at most r.

    Product over i = 0 .. n-r-1 of (n+i)! i! / ((r+i)! (n-r+i)!).
    """
    _check_range(n, r)
    d = Fraction(1)
    for i in range(n - r):
        d *= Fraction(factorial(n + i) * factorial(i), factorial(r + i) * factorial(n - r + i))
    assert d.denominator == 1, f"non-integral degree for n={n}, r={r}"
    return d.numerator


def is_odd_degree(n: int, r2: int) -> bool:
    return p2_valuation(degree_determinantal(n, r2)) == 0


def min_measurement_bound(spec: ProblemSpec) -> int:
    n, r = spec.n, spec.r
    if spec.variant == "general":
        return 4 * n * r - 4 * r * r
    if spec.variant == "symmetric":
        return 2 * n * r + r - 2 * r * r
    return 2 * n * r - r * r + 1


def _is_power_of_two(k: int) -> bool:
    return k >= 2 and k & (k - 1) == 0


def tightness_classify(spec: ProblemSpec) -> TightnessVerdict:
    """Is the measurement bound for ``spec`` known to be sharp?

    Only cases settled by a proved theorem get a definite answer; ``n - r``
    must be 2**k with k >= 1 for the parity argument to apply.
    """
    n, r = spec.n, spec.r
    if spec.variant == "weak-recovery":
        return TightnessVerdict(UNKNOWN)
    if spec.field == "complex":
        if spec.variant == "general":
            return TightnessVerdict(TIGHT, "complex case: 4nr-4r^2 is necessary for every n, r <= n/2")
        return TightnessVerdict(UNKNOWN)
    if spec.variant == "general":
        if _is_power_of_two(n - r):
            return TightnessVerdict(TIGHT, f"real case with n - r = {n - r} a power of two: d(n,2r) is odd")
        if n == 2 * r + 1:
            return TightnessVerdict(TIGHT, "real case with n = 2r+1: d(n,2r) = 2r+1 is odd")
        if (n, r) == (4, 1):
            return TightnessVerdict(NOT_TIGHT, "explicit 11 = 4n-5 matrices injective on rank-1 4x4 real matrices")
        return TightnessVerdict(UNKNOWN)
    # real symmetric
    if _is_power_of_two(n - r):
        return TightnessVerdict(TIGHT, f"real symmetric case with n - r = {n - r} a power of two")
    if (n, r) == (4, 1):
        return TightnessVerdict(NOT_TIGHT, "explicit 6 = 2n-2 projections give phase retrieval in R^4")
    return TightnessVerdict(UNKNOWN)


def table_row(n: int, r: int, variant: str, field: str = "real") -> dict:
    """One machine-readable row of the bounds table."""
    spec = ProblemSpec(n, r, variant, field)
    r2 = 2 * r
    if variant == "weak-recovery":
        dim = dim_lowrank(n, r, "general")
        deg = degree_determinantal(n, r)
    else:
        dim = dim_lowrank(n, r2, variant)
        deg = degree_determinantal(n, r2)
    verdict = tightness_classify(spec)
    return {
        "n": n,
        "r": r,
        "variant": variant,
        "field": field,
        "dim": dim,
        "degree": deg,
        "odd_degree": deg % 2 == 1,
        "bound": min_measurement_bound(spec),
        "tightness": verdict.value,
        "citation": verdict.citation,
    }
