"""Phase retrieval by orthogonal projections.

||P x||^2 = <P, x x^T> for an orthogonal projector P, so subspaces W_j give
phase retrieval (x recovered up to sign from the norms ||P_j x||) exactly
when the projector ensemble is injective on symmetric rank-1 matrices.
Projectors are built over the rationals from any basis, without
orthonormalizing.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .certify import CertifyConfig, Certificate, MeasurementEnsemble, vinzant_certify
from .exactnum import format_rational, parse_rational

Vector = list
Matrix = list


class SubspaceError(ValueError):
    pass


def _mat_mul(A: Matrix, B: Matrix) -> Matrix:
    Bt = list(zip(*B))
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in Bt] for row in A]


def _transpose(A: Matrix) -> Matrix:
    return [list(r) for r in zip(*A)]


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank by fraction-free (Bareiss) elimination over the integers."""
    rows = [[Fraction(x) for x in r] for r in rows]
    if not rows:
        return 0
    # clear denominators row by row
    M = []
    for r in rows:
        den = 1
        for x in r:
            den = den * x.denominator // _gcd(den, x.denominator)
        M.append([int(x * den) for x in r])
    nrows, ncols = len(M), len(M[0])
    rk = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rk, nrows) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[rk], M[piv] = M[piv], M[rk]
        p = M[rk][col]
        for i in range(rk + 1, nrows):
            a = M[i][col]
            M[i] = [(p * M[i][j] - a * M[rk][j]) // prev for j in range(ncols)]
        prev = p
        rk += 1
        if rk == nrows:
            break
    return rk


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _inverse(A: Matrix) -> Matrix:
    """Gauss-Jordan inverse over the rationals; raises on singular input."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col] != 0), None)
        if piv is None:
            raise SubspaceError("basis vectors are linearly dependent")
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for i in range(n):
            if i != col and M[i][col]:
                f = M[i][col]
                M[i] = [x - f * y for x, y in zip(M[i], M[col])]
    return [row[n:] for row in M]


def projection_matrix(basis: Sequence[Sequence]) -> Matrix:
    """Orthogonal projector onto span(basis): B (B^T B)^{-1} B^T, exactly."""
    if not basis:
        raise SubspaceError("empty basis")
    vecs = [[parse_rational(x) for x in v] for v in basis]
    n = len(vecs[0])
    if any(len(v) != n for v in vecs):
        raise SubspaceError("basis vectors have different lengths")
    B = _transpose(vecs)  # n x d
    gram = _mat_mul(vecs, B)  # d x d
    return _mat_mul(_mat_mul(B, _inverse(gram)), vecs)


@dataclass
class Subspace:
    basis: list[Vector]

    def __post_init__(self):
        self.basis = [[parse_rational(x) for x in v] for v in self.basis]
        if not self.basis:
            raise SubspaceError("empty basis")
        if rank(self.basis) != len(self.basis):
            raise SubspaceError("basis vectors are linearly dependent")
        self._P = None

    @property
    def ambient_dim(self) -> int:
        return len(self.basis[0])

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def projector(self) -> Matrix:
        if self._P is None:
            self._P = projection_matrix(self.basis)
        return self._P


def projection_ensemble(subspaces: Sequence[Subspace], n: int | None = None) -> MeasurementEnsemble:
    if not subspaces:
        raise SubspaceError("need at least one subspace")
    if n is None:
        n = subspaces[0].ambient_dim
    for W in subspaces:
        if W.ambient_dim != n:
            raise SubspaceError(f"subspace lives in R^{W.ambient_dim}, expected R^{n}")
    return MeasurementEnsemble(n=n, matrices=[W.projector for W in subspaces], r=1, symmetric=True)


def certify_phase_retrieval(subspaces: Sequence[Subspace], config: CertifyConfig | None = None) -> Certificate:
    """INJECTIVE means x is determined up to sign by the norms ||P_j x||."""
    n = subspaces[0].ambient_dim if subspaces else 0
    if n < 2:
        raise SubspaceError("phase retrieval needs n >= 2")
    return vinzant_certify(projection_ensemble(subspaces, n), config)


def complement_property(vectors: Sequence[Sequence], max_m: int = 24) -> bool:
    """Every subset of the vectors or its complement spans R^n.

    Exhaustive over subsets (each pair {I, I^c} checked once).
    """
    vecs = [[parse_rational(x) for x in v] for v in vectors]
    m = len(vecs)
    if m < 1:
        raise ValueError("need at least one vector")
    if m > max_m:
        raise ValueError(f"{m} vectors exceed the exhaustive-check cap of {max_m}")
    n = len(vecs[0])
    cache: dict[frozenset, bool] = {}

    def spans(idx: frozenset) -> bool:
        hit = cache.get(idx)
        if hit is None:
            hit = len(idx) >= n and rank([vecs[i] for i in idx]) == n
            cache[idx] = hit
        return hit

    everything = frozenset(range(m))
    # subsets containing index 0 cover every unordered pair {I, I^c}
    for size in range(0, m):
        for rest in itertools.combinations(range(1, m), size):
            I = frozenset((0,) + rest)
            if not (spans(I) or spans(everything - I)):
                return False
    return True


def load_subspaces(text: str) -> list[Subspace]:
    """Parse the subspace file format ``{"n": .., "subspaces": [[[..]]]}``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SubspaceError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "subspaces" not in data or "n" not in data:
        raise SubspaceError("subspace file needs 'n' and 'subspaces'")
    n = data["n"]
    out = []
    for basis in data["subspaces"]:
        try:
            W = Subspace(basis)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise SubspaceError(f"bad subspace {basis!r}: {exc}") from None
        if W.ambient_dim != n:
            raise SubspaceError(f"subspace {basis!r} is not in R^{n}")
        out.append(W)
    return out


def dump_subspaces(subspaces: Sequence[Subspace]) -> str:
    n = subspaces[0].ambient_dim if subspaces else 0
    return json.dumps(
        {"n": n, "subspaces": [[[format_rational(x) for x in v] for v in W.basis] for W in subspaces]},
        indent=1,
    )
