"""Certify that a measurement ensemble is injective on low-rank matrices.

The test: the map Q -> (<A_j, Q>)_j is injective on matrices of rank <= r
iff no nonzero matrix of rank <= 2r lies in its kernel.  That kernel set is
cut out by the (2r+1)-minors of a symbolic matrix together with the linear
forms <A_j, Q>.  We

1. eliminate every variable except a kept pair (a, b) to get a binary form
   f0 in the ideal,
2. check with Sturm sequences that f0 has no real root besides (0, 0),
3. for every variable v, check that 1 lies in the ideal plus
   <v - 1, a, b>, i.e. no kernel element has a = b = 0 and v = 1.

A nonzero real kernel element would give a real root of f0, so it must
have a = b = 0; scaling some nonzero coordinate to 1 then contradicts
step 3.  The verdict INJECTIVE is therefore a proof; FAIL only says which
step could not be completed.
"""

from __future__ import annotations

import itertools
import json
import logging
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactnum import format_rational, parse_rational
from .groebner import (
    GREVLEX,
    Ideal,
    Limits,
    ResourceExceeded,
    buchberger,
    elimination_ideal,
    normal_form,
)
from .poly import Polynomial, make_variables
from .realroots import count_real_roots, homogeneous_has_nonzero_real_root
from .poly import dehomogenize

log = logging.getLogger(__name__)

INJECTIVE = "INJECTIVE"
FAIL = "FAIL"
INDETERMINATE = "INDETERMINATE"

Matrix = list  # list of rows of Fractions


class EnsembleError(ValueError):
    """Malformed measurement ensemble."""


@dataclass
class MeasurementEnsemble:
    n: int
    matrices: list[Matrix]
    r: int = 1
    symmetric: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise EnsembleError(f"matrix size must be positive, got {self.n}")
        if not self.matrices:
            raise EnsembleError("an ensemble needs at least one matrix")
        if self.r < 1:
            raise EnsembleError(f"rank bound must be positive, got {self.r}")
        clean = []
        for idx, A in enumerate(self.matrices):
            if len(A) != self.n or any(len(row) != self.n for row in A):
                raise EnsembleError(f"matrix {idx + 1} is not {self.n}x{self.n}")
            clean.append([[parse_rational(x) for x in row] for row in A])
        self.matrices = clean

    @property
    def m(self) -> int:
        return len(self.matrices)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "symmetric": self.symmetric,
            "matrices": [[[format_rational(x) for x in row] for row in A] for A in self.matrices],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MeasurementEnsemble":
        if not isinstance(data, dict):
            raise EnsembleError("ensemble file must hold a JSON object")
        for key in ("n", "matrices"):
            if key not in data:
                raise EnsembleError(f"ensemble file is missing {key!r}")
        n = data["n"]
        r = data.get("r", 1)
        sym = data.get("symmetric", False)
        if not isinstance(n, int) or isinstance(n, bool):
            raise EnsembleError(f"'n' must be an integer, got {n!r}")
        if not isinstance(r, int) or isinstance(r, bool):
            raise EnsembleError(f"'r' must be an integer, got {r!r}")
        if not isinstance(sym, bool):
            raise EnsembleError(f"'symmetric' must be a boolean, got {sym!r}")
        mats = data["matrices"]
        if not isinstance(mats, list):
            raise EnsembleError("'matrices' must be a list")
        parsed = []
        for A in mats:
            if not isinstance(A, list) or not all(isinstance(row, list) for row in A):
                raise EnsembleError(f"matrix entry {A!r} is not a list of rows")
            rows = []
            for row in A:
                out = []
                for x in row:
                    if not isinstance(x, (str, int)) or isinstance(x, bool):
                        raise EnsembleError(f"matrix entry {x!r} must be a decimal or 'p/q' string")
                    try:
                        out.append(parse_rational(x))
                    except (ValueError, ZeroDivisionError) as exc:
                        raise EnsembleError(f"bad matrix entry {x!r}: {exc}") from None
                rows.append(out)
            parsed.append(rows)
        return cls(n=n, matrices=parsed, r=r, symmetric=sym)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    @classmethod
    def loads(cls, text: str) -> "MeasurementEnsemble":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise EnsembleError(f"invalid JSON: {exc}") from None
        return cls.from_json(data)


# ---------------------------------------------------------------------------
# symbolic unknown, minors, linear forms


def _var_name(j: int, k: int, n: int) -> str:
    return f"x{j}{k}" if n < 10 else f"x{j}_{k}"


@dataclass(frozen=True)
class SymbolicMatrix:
    n: int
    symmetric: bool
    variables: tuple[str, ...]
    grid: tuple[tuple[str, ...], ...]

    def entry(self, j: int, k: int) -> Polynomial:
        """Entry (j, k), 0-based, as a polynomial."""
        return Polynomial.variable(self.variables, self.grid[j][k])


def symbolic_unknown(n: int, symmetric: bool = False) -> SymbolicMatrix:
    """Row-major symbolic n x n matrix; symmetric ones use the upper triangle."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if symmetric:
        names = [_var_name(j, k, n) for j in range(1, n + 1) for k in range(j, n + 1)]
        grid = tuple(
            tuple(_var_name(min(j, k), max(j, k), n) for k in range(1, n + 1)) for j in range(1, n + 1)
        )
    else:
        names = [_var_name(j, k, n) for j in range(1, n + 1) for k in range(1, n + 1)]
        grid = tuple(tuple(_var_name(j, k, n) for k in range(1, n + 1)) for j in range(1, n + 1))
    return SymbolicMatrix(n, symmetric, make_variables(names), grid)


def _det(Q: SymbolicMatrix, rows: tuple, cols: tuple, cache: dict) -> Polynomial:
    key = (rows, cols)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if len(rows) == 1:
        out = Q.entry(rows[0], cols[0])
    else:
        out = Polynomial.zero(Q.variables)
        r0, rest = rows[0], rows[1:]
        for i, c in enumerate(cols):
            sub = _det(Q, rest, cols[:i] + cols[i + 1 :], cache)
            term = Q.entry(r0, c) * sub
            out = out + term if i % 2 == 0 else out - term
    cache[key] = out
    return out


def minors(Q: SymbolicMatrix, s: int) -> list[Polynomial]:
    """All s x s minors (row subsets outermost), duplicates removed."""
    if not 1 <= s <= Q.n:
        raise ValueError(f"minor size must be in 1..{Q.n}, got {s}")
    cache: dict = {}
    out = []
    seen = set()
    idx = tuple(range(Q.n))
    for rows in itertools.combinations(idx, s):
        for cols in itertools.combinations(idx, s):
            p = _det(Q, rows, cols, cache)
            if p.is_zero() or p in seen:
                continue
            seen.add(p)
            out.append(p)
    return out


def measurement_forms(E: MeasurementEnsemble, Q: SymbolicMatrix) -> list[Polynomial]:
    """The linear forms <A_j, Q> = sum_{jk} (A_j)_{jk} Q_{jk}."""
    if E.n != Q.n:
        raise EnsembleError(f"ensemble is {E.n}x{E.n} but unknown is {Q.n}x{Q.n}")
    nv = len(Q.variables)
    index = {v: i for i, v in enumerate(Q.variables)}
    out = []
    for A in E.matrices:
        coeffs: dict = {}
        for j in range(Q.n):
            for k in range(Q.n):
                if A[j][k]:
                    v = index[Q.grid[j][k]]
                    coeffs[v] = coeffs.get(v, 0) + A[j][k]
        terms = {tuple(int(i == v) for i in range(nv)): c for v, c in coeffs.items()}
        out.append(Polynomial(Q.variables, terms))
    return out


def evaluate_measurements(E: MeasurementEnsemble, M: Sequence[Sequence]) -> list[Fraction]:
    """Exact measurement vector (trace(A_j^T M))_j of a numeric matrix."""
    if len(M) != E.n or any(len(row) != E.n for row in M):
        raise EnsembleError(f"matrix is not {E.n}x{E.n}")
    M = [[Fraction(x) for x in row] for row in M]
    return [
        sum((A[j][k] * M[j][k] for j in range(E.n) for k in range(E.n)), Fraction(0)) for A in E.matrices
    ]


# ---------------------------------------------------------------------------
# linear preprocessing


@dataclass
class ReducedSystem:
    """Result of eliminating pivot variables with the linear generators."""

    variables: tuple[str, ...]
    substitution: dict[str, Polynomial]  # pivot -> image over ``variables``
    linears: list[Polynomial]  # residual linear generators (only kept vars)
    others: list[Polynomial]  # images of the nonlinear generators

    def generators(self) -> list[Polynomial]:
        return self.linears + self.others

    def image(self, p: Polynomial) -> Polynomial:
        return p.substitute(self.substitution, self.variables)


def linear_preprocess(
    linears: Sequence[Polynomial],
    others: Sequence[Polynomial],
    keep: Sequence[str] = (),
) -> ReducedSystem:
    """Gauss-Jordan eliminate pivot variables (never from ``keep``).

    Every linear generator must be homogeneous of degree 1.  Pivots are
    chosen left to right in the variable order.  Rows that end up touching
    only kept variables stay behind as generators.
    """
    if not linears and not others:
        raise ValueError("nothing to preprocess")
    variables = (linears[0] if linears else others[0]).variables
    n = len(variables)
    keep = set(keep)
    rows = []
    for p in linears:
        if p.variables != variables:
            raise ValueError("linear forms over different variable sets")
        if not p.is_zero() and (not p.is_homogeneous() or p.degree() != 1):
            raise ValueError(f"not a linear form: {p}")
        row = [Fraction(0)] * n
        for e, c in p.terms.items():
            row[e.index(1)] = c
        rows.append(row)

    pivots: list[int] = []
    pivot_rows: list[list[Fraction]] = []
    eligible = [i for i, v in enumerate(variables) if v not in keep]
    remaining = [r for r in rows if any(r)]
    for col in eligible:
        pr = next((r for r in remaining if r[col] != 0), None)
        if pr is None:
            continue
        remaining = [r for r in remaining if r is not pr]
        inv = 1 / pr[col]
        pr = [x * inv for x in pr]
        remaining = [_axpy(r, pr, -r[col]) if r[col] else r for r in remaining]
        remaining = [r for r in remaining if any(r)]
        pivot_rows = [_axpy(r, pr, -r[col]) if r[col] else r for r in pivot_rows]
        pivots.append(col)
        pivot_rows.append(pr)

    pivot_set = set(pivots)
    free = tuple(v for i, v in enumerate(variables) if i not in pivot_set)
    free_index = {v: i for i, v in enumerate(free)}

    def linear_poly(row, skip=None):
        terms = {}
        for i, c in enumerate(row):
            if c and i != skip:
                e = [0] * len(free)
                e[free_index[variables[i]]] = 1
                terms[tuple(e)] = c
        return Polynomial(free, terms)

    substitution = {}
    for col, pr in zip(pivots, pivot_rows):
        substitution[variables[col]] = -linear_poly(pr, skip=col)
    residual = []
    for r in remaining:
        p = linear_poly(r)
        _, p = p.primitive()
        residual.append(p)
    images = []
    seen = set()
    for p in others:
        img = p.substitute(substitution, free)
        if img.is_zero():
            continue
        _, img = img.primitive()
        if img in seen:
            continue
        seen.add(img)
        images.append(img)
    return ReducedSystem(free, substitution, residual, images)


def _axpy(r, p, a):
    return [x + a * y for x, y in zip(r, p)]


# ---------------------------------------------------------------------------
# certificate


@dataclass
class CertifyConfig:
    keep: tuple[str, str] | None = None  # default: last two variables
    limits: Limits = field(default_factory=Limits)
    preprocess: bool = True


@dataclass
class Certificate:
    verdict: str
    reason: str = ""
    n: int = 0
    r: int = 1
    symmetric: bool = False
    m: int = 0
    keep: tuple[str, str] = ("", "")
    f0: Polynomial | None = None
    root_count: int | None = None
    slices: dict[str, bool] = field(default_factory=dict)
    elimination_generators: list[Polynomial] = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def injective(self) -> bool:
        return self.verdict == INJECTIVE

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "n": self.n,
            "r": self.r,
            "symmetric": self.symmetric,
            "m": self.m,
            "keep": list(self.keep),
            "f0": None if self.f0 is None else self.f0.to_str(),
            "f0_degree": None if self.f0 is None else int(self.f0.degree()),
            "root_count": self.root_count,
            "slices": dict(self.slices),
            "elimination_generators": [g.to_str() for g in self.elimination_generators],
            "stats": self.stats,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        keep = tuple(data.get("keep", ("", "")))
        f0 = data.get("f0")
        return cls(
            verdict=data["verdict"],
            reason=data.get("reason", ""),
            n=data.get("n", 0),
            r=data.get("r", 1),
            symmetric=data.get("symmetric", False),
            m=data.get("m", 0),
            keep=keep,
            f0=None if f0 is None else Polynomial.parse(f0, keep),
            root_count=data.get("root_count"),
            slices=dict(data.get("slices", {})),
            elimination_generators=[Polynomial.parse(g, keep) for g in data.get("elimination_generators", [])],
            stats=data.get("stats", {}),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    @classmethod
    def loads(cls, text: str) -> "Certificate":
        return cls.from_json(json.loads(text))


def build_system(E: MeasurementEnsemble) -> tuple[SymbolicMatrix, list[Polynomial], list[Polynomial]]:
    """Symbolic unknown, (2r+1)-minors and linear forms for ``E``."""
    Q = symbolic_unknown(E.n, E.symmetric)
    s = 2 * E.r + 1
    mins = minors(Q, s) if s <= E.n else []
    return Q, mins, measurement_forms(E, Q)


def _f0_candidates(gens: list[Polynomial], max_degree: int) -> list[Polynomial]:
    """Elimination generators ordered by degree then coefficients.

    When there are several generators a sum of even powers (all raised to
    a common degree) is appended: it lies in the ideal and has a nonzero
    real root only if all generators share one.
    """
    def sort_key(p):
        _, prim = p.primitive()
        return (int(p.degree()), [c for c, _ in prim.sorted_terms()])

    cands = sorted((g.primitive()[1] for g in gens), key=sort_key)
    if len(cands) > 1 and all(g.is_homogeneous() for g in cands):
        L = 1
        for g in cands:
            L = math.lcm(L, int(g.degree()))
        if 2 * L <= max_degree:
            acc = Polynomial.zero(cands[0].variables)
            for g in cands:
                acc = acc + g ** (2 * L // int(g.degree()))
            cands.append(acc.primitive()[1])
    return cands


def vinzant_certify(E: MeasurementEnsemble, config: CertifyConfig | None = None) -> Certificate:
    """Run the elimination / Sturm / slice test on ``E``."""
    config = config or CertifyConfig()
    if 2 * E.r > E.n:
        raise EnsembleError(f"certification needs r <= n/2, got n={E.n}, r={E.r}")
    t0 = time.monotonic()
    Q, mins, forms = build_system(E)
    keep = tuple(config.keep) if config.keep else Q.variables[-2:]
    if len(keep) != 2 or any(v not in Q.variables for v in keep) or keep[0] == keep[1]:
        raise EnsembleError(f"kept pair must be two distinct variables of the unknown, got {keep}")
    cert = Certificate(verdict=FAIL, n=E.n, r=E.r, symmetric=E.symmetric, m=E.m, keep=keep)
    stats: dict = {"variables": len(Q.variables), "minors": len(mins)}
    cert.stats = stats
    limits = config.limits
    deadline = None if limits.timeout is None else t0 + limits.timeout

    def remaining_limits():
        if deadline is None:
            return limits
        left = deadline - time.monotonic()
        if left <= 0:
            raise ResourceExceeded("time", f"{limits.timeout}s")
        return Limits(limits.max_pairs, limits.max_degree, left)

    try:
        # (1)-(3): eliminate to the kept pair
        if config.preprocess:
            red = linear_preprocess(forms, mins, keep)
            gens = red.generators()
            variables = red.variables
            stats["reduced_variables"] = len(variables)
        else:
            gens = forms + mins
            variables = Q.variables
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            cert.reason = "zero elimination ideal"
            return cert
        elim, G = elimination_ideal(Ideal(gens, variables), keep, remaining_limits(), return_basis=True)
        stats["elimination"] = G.stats.as_dict()
        cert.elimination_generators = [g for g in elim]
        if not elim:
            cert.reason = "zero elimination ideal"
            return cert
        # (4): f0 must have no real root besides the origin
        f0 = None
        for cand in _f0_candidates(elim, limits.max_degree):
            if not homogeneous_has_nonzero_real_root(cand):
                f0 = cand
                break
        if f0 is None:
            f0 = _f0_candidates(elim, limits.max_degree)[0]
            cert.f0 = f0
            cert.root_count = _dehomogenized_root_count(f0)
            cert.reason = "f0 has nonzero real root"
            return cert
        cert.f0 = f0
        cert.root_count = _dehomogenized_root_count(f0)
        # (5): slices a = b = 0, v = 1
        all_ok = True
        for v in Q.variables:
            ok = slice_contains_one(forms, mins, keep, v, remaining_limits(), preprocess=config.preprocess)
            cert.slices[v] = ok
            if not ok:
                all_ok = False
                break
        if not all_ok:
            cert.reason = "slice has solutions"
            return cert
        cert.verdict = INJECTIVE
        cert.reason = ""
        return cert
    except ResourceExceeded as exc:
        cert.verdict = INDETERMINATE
        cert.reason = str(exc)
        return cert
    finally:
        stats["seconds"] = round(time.monotonic() - t0, 3)


def _dehomogenized_root_count(f0: Polynomial) -> int:
    if f0.degree() == 0:
        return 0
    return count_real_roots(dehomogenize(f0, f0.variables[1]))


def slice_contains_one(
    forms: Sequence[Polynomial],
    mins: Sequence[Polynomial],
    keep: Sequence[str],
    v: str,
    limits: Limits | None = None,
    preprocess: bool = True,
) -> bool:
    """Is 1 in <v - 1, a, b, minors, forms>?"""
    variables = (forms[0] if forms else mins[0]).variables
    a, b = (Polynomial.variable(variables, x) for x in keep)
    one_v = Polynomial.variable(variables, v) - 1
    if not preprocess:
        return buchberger(Ideal(list(forms) + list(mins) + [a, b, one_v], variables), GREVLEX, limits).is_unit()
    red = linear_preprocess(list(forms) + [a, b], list(mins), ())
    img = red.image(Polynomial.variable(variables, v)) - 1
    if img.is_constant():
        return True  # v is forced to 0, so v - 1 is a nonzero constant
    gens = red.generators() + [img]
    return buchberger(Ideal(gens, red.variables), GREVLEX, limits).is_unit()


# ---------------------------------------------------------------------------
# post-hoc audit


@dataclass
class AuditReport:
    f0_homogeneous: bool
    f0_in_ideal: bool
    leading_power_nonzero: bool
    no_nonzero_real_root: bool
    slices: dict[str, bool]

    @property
    def passed(self) -> bool:
        return (
            self.f0_homogeneous
            and self.f0_in_ideal
            and self.leading_power_nonzero
            and self.no_nonzero_real_root
            and bool(self.slices)
            and all(self.slices.values())
        )


def audit_certificate(E: MeasurementEnsemble, cert: Certificate, limits: Limits | None = None) -> AuditReport:
    """Re-check an INJECTIVE certificate without the construction shortcuts.

    f0 membership is decided against a grevlex basis of the full ideal in
    all variables (no linear preprocessing, no elimination order), and each
    slice ideal is handed to Buchberger as is.
    """
    if cert.f0 is None:
        raise ValueError("certificate carries no f0")
    Q, mins, forms = build_system(E)
    f0 = cert.f0
    homog = f0.is_homogeneous()
    d = int(f0.degree())
    lead_ok = f0.coefficient((d, 0)) != 0
    G = buchberger(Ideal(forms + mins, Q.variables), GREVLEX, limits)
    in_ideal = normal_form(f0.embed(Q.variables), G).is_zero()
    no_root = not homogeneous_has_nonzero_real_root(f0)
    slices = {}
    for v in Q.variables:
        slices[v] = slice_contains_one(forms, mins, cert.keep, v, limits, preprocess=False)
    return AuditReport(homog, in_ideal, lead_ok, no_root, slices)


def proportional(p: Polynomial, q: Polynomial) -> bool:
    """Equal up to a nonzero rational scalar."""
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    if p.variables != q.variables:
        q = q.embed(p.variables)
    return p.primitive()[1] == q.primitive()[1]
