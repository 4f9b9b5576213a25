from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rankcert.variety import (
    NOT_TIGHT,
    TIGHT,
    UNKNOWN,
    ProblemSpec,
    TightnessVerdict,
    degree_determinantal,
    dim_lowrank,
    is_odd_degree,
    min_measurement_bound,
    table_row,
    tightness_classify,
)


def binomial_degree(n: int, r: int) -> int:
    """Same degree via a product of binomial ratios (independent rewrite)."""
    d = Fraction(1)
    for i in range(n - r):
        d *= Fraction(math.comb(n + i, r), math.comb(r + i, r))
    assert d.denominator == 1
    return d.numerator


@pytest.mark.parametrize("n", range(1, 12))
def test_classical_degrees(n):
    # rank <= 1: Segre embedding of P^{n-1} x P^{n-1}
    assert degree_determinantal(n, 1) == math.comb(2 * n - 2, n - 1)
    # rank <= n-1: the determinant hypersurface
    assert degree_determinantal(n, n - 1) == n
    assert degree_determinantal(n, n) == 1
    assert degree_determinantal(n, 0) == 1


@given(st.integers(1, 25).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
def test_degree_matches_binomial_form(nr):
    n, r = nr
    assert degree_determinantal(n, r) == binomial_degree(n, r)


def test_dimension_by_parameter_count():
    # rank <= r: choose an r-dim column space (Grassmannian) plus an r x n coefficient block
    for n in range(1, 9):
        for r in range(0, n + 1):
            assert dim_lowrank(n, r) == r * (n - r) + r * n
            # symmetric: sum of r signed rank-one terms v v^T modulo O(r)
            assert dim_lowrank(n, r, "symmetric") == r * n - r * (r - 1) // 2


def test_bound_values_at_4_1():
    assert [min_measurement_bound(ProblemSpec(4, 1, v)) for v in ("general", "symmetric", "weak-recovery")] == [12, 7, 8]


def test_invalid_specs():
    with pytest.raises(ValueError):
        ProblemSpec(3, 2)
    with pytest.raises(ValueError):
        ProblemSpec(3, 0)
    with pytest.raises(ValueError):
        ProblemSpec(4, 1, "hermitian")
    with pytest.raises(ValueError):
        dim_lowrank(2, 3)
    with pytest.raises(ValueError):
        TightnessVerdict(TIGHT)


@pytest.mark.parametrize(
    "n,r,variant,field,value",
    [
        (3, 1, "general", "real", TIGHT),
        (4, 1, "general", "real", NOT_TIGHT),
        (6, 1, "general", "real", UNKNOWN),
        (5, 1, "general", "real", TIGHT),
        (5, 2, "general", "real", TIGHT),  # n = 2r + 1
        (6, 1, "general", "complex", TIGHT),
        (3, 1, "symmetric", "real", TIGHT),
        (4, 1, "symmetric", "real", NOT_TIGHT),
        (5, 2, "symmetric", "real", UNKNOWN),
        (5, 1, "weak-recovery", "real", UNKNOWN),
    ],
)
def test_tightness(n, r, variant, field, value):
    v = tightness_classify(ProblemSpec(n, r, variant, field))
    assert v.value == value
    assert bool(v.citation) == (value != UNKNOWN)


def test_tight_general_real_cases_have_odd_degree():
    for n in range(2, 21):
        for r in range(1, n // 2 + 1):
            if tightness_classify(ProblemSpec(n, r)).value == TIGHT:
                assert is_odd_degree(n, 2 * r)


def test_table_row():
    row = table_row(4, 1, "general")
    assert row["degree"] == 20 and row["bound"] == 12 and row["dim"] == 12
    assert table_row(4, 1, "weak-recovery")["bound"] == 8
