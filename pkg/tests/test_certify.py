from __future__ import annotations

import itertools
import json
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from rankcert.certify import (
    FAIL,
    INDETERMINATE,
    INJECTIVE,
    Certificate,
    CertifyConfig,
    EnsembleError,
    MeasurementEnsemble,
    audit_certificate,
    build_system,
    evaluate_measurements,
    linear_preprocess,
    measurement_forms,
    minors,
    proportional,
    slice_contains_one,
    symbolic_unknown,
    vinzant_certify,
)
from rankcert.groebner import Ideal, Limits, buchberger
from rankcert.poly import Polynomial

entry = st.integers(-4, 4)


def matrices(n, m):
    return st.lists(st.lists(st.lists(entry, min_size=n, max_size=n), min_size=n, max_size=n), min_size=m, max_size=m)


def measurement_matrix(E: MeasurementEnsemble) -> sympy.Matrix:
    """Rows = measurements, columns = free entries of the unknown."""
    Q = symbolic_unknown(E.n, E.symmetric)
    rows = []
    for form in measurement_forms(E, Q):
        rows.append([form.coefficient(tuple(int(i == j) for i in range(len(Q.variables)))) for j in range(len(Q.variables))])
    return sympy.Matrix(rows)


def test_minor_count_and_values():
    Q = symbolic_unknown(4)
    mins = minors(Q, 3)
    assert len(mins) == 16
    rng = random.Random(3)
    M = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(4)]
    point = {Q.grid[j][k]: M[j][k] for j in range(4) for k in range(4)}
    expected = sorted(
        sympy.Matrix(M).extract(list(rs), list(cs)).det()
        for rs in itertools.combinations(range(4), 3)
        for cs in itertools.combinations(range(4), 3)
    )
    assert sorted(m.evaluate(point) for m in mins) == expected


def test_symmetric_unknown_and_minor_dedup():
    Q = symbolic_unknown(3, symmetric=True)
    assert Q.variables == ("x11", "x12", "x13", "x22", "x23", "x33")
    assert Q.grid[2][0] == "x13"
    # the 2x2 minors of a symmetric 3x3 matrix: 9 index pairs, 3 transposed duplicates
    assert len(minors(Q, 2)) == 6
    assert symbolic_unknown(10).variables[1] == "x1_2"


def test_symmetric_forms_merge_transposed_entries():
    E = MeasurementEnsemble(2, [[[1, 2], [3, 4]]], symmetric=True)
    Q = symbolic_unknown(2, True)
    (form,) = measurement_forms(E, Q)
    assert form == Polynomial.parse("x11 + 5*x12 + 4*x22", Q.variables)


def test_evaluate_measurements():
    E = MeasurementEnsemble(2, [[[1, 0], [0, 0]], [[0, "1/2"], [-1, 3]]])
    assert evaluate_measurements(E, [[2, 4], [6, 8]]) == [2, Fraction(2) - 6 + 24]


def test_linear_preprocess_keeps_pair_and_ideal():
    rng = random.Random(7)
    E = MeasurementEnsemble(3, [[[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)] for _ in range(5)])
    _, mins, forms = build_system(E)
    keep = ("x32", "x33")
    red = linear_preprocess(forms, mins, keep)
    assert set(keep) <= set(red.variables)
    assert len(red.variables) == 9 - 5
    # every form maps to zero under the substitution
    for f in forms:
        assert red.image(f).is_zero()


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(matrices(2, 4))
def test_n2_verdict_matches_full_rank(mats):
    E = MeasurementEnsemble(2, mats)
    cert = vinzant_certify(E)
    full_rank = measurement_matrix(E).rank() == 4
    assert (cert.verdict == INJECTIVE) == full_rank
    if not full_rank:
        assert cert.verdict == FAIL


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(matrices(3, 5))
def test_n3_symmetric_soundness(mats):
    E = MeasurementEnsemble(3, mats, symmetric=True)
    cert = vinzant_certify(E)
    if cert.verdict != INJECTIVE:
        return
    kernel = measurement_matrix(E).nullspace()
    Q = symbolic_unknown(3, True)
    for vec in kernel:
        K = [[vec[Q.variables.index(Q.grid[j][k])] for k in range(3)] for j in range(3)]
        assert sympy.Matrix(K).det() != 0


def test_n3_symmetric_m4_never_injective():
    rng = random.Random(11)
    for _ in range(5):
        E = MeasurementEnsemble(3, [[[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)] for _ in range(4)], symmetric=True)
        assert vinzant_certify(E).verdict != INJECTIVE


def test_zero_elimination_ideal():
    # a single measurement leaves a huge kernel: the elimination ideal is zero
    E = MeasurementEnsemble(3, [[[1, 0, 0], [0, 1, 0], [0, 0, 1]]])
    cert = vinzant_certify(E)
    assert cert.verdict == FAIL and cert.reason == "zero elimination ideal"


def test_resource_limit_gives_indeterminate():
    rng = random.Random(5)
    E = MeasurementEnsemble(4, [[[rng.randint(-4, 4) for _ in range(4)] for _ in range(4)] for _ in range(6)], symmetric=True)
    cert = vinzant_certify(E, CertifyConfig(limits=Limits(max_pairs=3)))
    assert cert.verdict == INDETERMINATE
    assert "pairs" in cert.reason


def test_injective_certificate_audits_and_roundtrips():
    E = MeasurementEnsemble(2, [[[1, 0], [0, 0]], [[0, 1], [0, 0]], [[0, 0], [1, 0]], [[0, 0], [0, 1]]])
    cert = vinzant_certify(E)
    assert cert.verdict == INJECTIVE
    rep = audit_certificate(E, cert)
    assert rep.passed
    again = Certificate.loads(cert.dumps())
    assert again.to_json() == cert.to_json()
    assert again.dumps() == cert.dumps()


def test_audit_rejects_tampered_f0():
    E = MeasurementEnsemble(2, [[[1, 0], [0, 0]], [[0, 1], [0, 0]], [[0, 0], [1, 0]], [[0, 0], [0, 1]]])
    cert = vinzant_certify(E)
    a, b = Polynomial.gens(cert.keep)
    E2 = MeasurementEnsemble(2, [[[1, 0], [0, 0]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]])
    cert.f0 = a**2 + b**2
    assert not audit_certificate(E2, cert).f0_in_ideal


def test_slice_check_against_plain_buchberger():
    rng = random.Random(2)
    E = MeasurementEnsemble(3, [[[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)] for _ in range(5)], symmetric=True)
    Q, mins, forms = build_system(E)
    keep = Q.variables[-2:]
    for v in Q.variables:
        fast = slice_contains_one(forms, mins, keep, v)
        slow = slice_contains_one(forms, mins, keep, v, preprocess=False)
        assert fast == slow


def test_ensemble_json_roundtrip_and_errors():
    E = MeasurementEnsemble(2, [[["1/3", -2], [0, 5]]], symmetric=True)
    text = E.dumps()
    assert MeasurementEnsemble.loads(text).to_json() == E.to_json()
    assert json.loads(text)["matrices"][0][0] == ["1/3", "-2"]
    with pytest.raises(EnsembleError, match="1.5"):
        MeasurementEnsemble.from_json({"n": 2, "matrices": [[[1.5, 0], [0, 0]]]})
    with pytest.raises(EnsembleError, match="abc"):
        MeasurementEnsemble.from_json({"n": 2, "matrices": [[["abc", 0], [0, 0]]]})
    with pytest.raises(EnsembleError):
        MeasurementEnsemble.loads("")
    with pytest.raises(EnsembleError):
        MeasurementEnsemble(2, [[[1, 2, 3], [0, 0]]])
    with pytest.raises(EnsembleError):
        vinzant_certify(MeasurementEnsemble(3, [[[1, 0, 0]] * 3], r=2))


def test_proportional():
    a, b = Polynomial.gens(("a", "b"))
    assert proportional(3 * a**2 - b**2, Fraction(-1, 2) * (a**2 * 3 - b**2))
    assert not proportional(a**2 + b**2, a**2 + 2 * b**2)
    assert not proportional(a, Polynomial.zero(("a", "b")))
