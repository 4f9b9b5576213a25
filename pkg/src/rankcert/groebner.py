"""Buchberger's algorithm over the rationals.

The engine works on an internal representation tuned for CPython:

* a monomial is a single integer *key*, a linear functional of its
  exponent vector chosen so that integer comparison is the monomial order
  and monomial multiplication is integer addition;
* divisibility is tested on a second packed integer (one 16-bit field per
  variable, top bit of each field used as a borrow guard);
* coefficients are Python ints; reduction is fraction-free and the
  content of the working polynomial is stripped after every step.

Public functions take and return :class:`~rankcert.poly.Polynomial`.
"""

from __future__ import annotations

import heapq
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import GREVLEX, MonomialOrder, Polynomial, VariableMismatch

_FIELD = 16
_GUARD_BIT = 1 << (_FIELD - 1)
_MAX_EXP = _GUARD_BIT - 1
_BASE = 1 << _FIELD


class ResourceExceeded(Exception):
    """A Gröbner computation hit one of its resource caps.

    ``kind`` is ``"degree"``, ``"pairs"`` or ``"time"``.  Callers must treat
    this as "no answer", never as a verdict.
    """

    def __init__(self, kind: str, detail: str = ""):
        self.kind = kind
        super().__init__(f"{kind} cap exceeded" + (f": {detail}" if detail else ""))


@dataclass
class Limits:
    max_pairs: int = 10**6
    max_degree: int = 64
    timeout: float | None = None  # seconds of wall clock


@dataclass
class Stats:
    pairs_processed: int = 0
    pairs_pruned: int = 0
    zero_reductions: int = 0
    max_degree: int = 0
    basis_size: int = 0
    seconds: float = 0.0

    def as_dict(self) -> dict:
        return dict(self.__dict__)


class _Ring:
    """Key/exponent encoding for one (variables, order) pair."""

    def __init__(self, nvars: int, order: MonomialOrder):
        self.n = nvars
        self.order = order
        rows = order.digit_weights(nvars)
        self.ndigits = len(rows)
        weights = [0] * nvars
        for j, row in enumerate(rows):
            scale = _BASE ** (self.ndigits - 1 - j)
            for i, w in enumerate(row):
                weights[i] += w * scale
        self.weights = weights
        self.rows = rows
        self.shifts = [_FIELD * (nvars - 1 - i) for i in range(nvars)]
        self.guard = sum(_GUARD_BIT << s for s in self.shifts)
        self.var_keys = weights  # key of each single variable
        self._exp_cache: dict[int, int] = {0: 0}
        self._deg_cache: dict[int, int] = {0: 0}

    def key(self, exp: Sequence[int]) -> int:
        return sum(w * e for w, e in zip(self.weights, exp))

    def packed(self, exp: Sequence[int]) -> int:
        return sum(e << s for e, s in zip(exp, self.shifts))

    def exponents_of_packed(self, packed: int) -> tuple:
        mask = _BASE - 1
        return tuple((packed >> s) & mask for s in self.shifts)

    def _digits(self, key: int) -> list[int]:
        half = _BASE >> 1
        out = []
        for _ in range(self.ndigits):
            d = key & (_BASE - 1)
            if d >= half:
                d -= _BASE
            out.append(d)
            key = (key - d) >> _FIELD
        out.reverse()
        return out

    def exponents(self, key: int) -> tuple:
        """Invert :meth:`key` (exponents must stay below 2**15)."""
        digits = self._digits(key)
        order = self.order
        n = self.n
        if order.kind == "lex":
            return tuple(digits)
        exp = [0] * n
        blocks = [(0, n)] if order.kind == "grevlex" else [(0, min(order.split, n)), (min(order.split, n), n)]
        pos = 0
        for lo, hi in blocks:
            if hi <= lo:
                continue
            deg = digits[pos]
            pos += 1
            rest = 0
            for j in range(hi - 1, lo, -1):
                exp[j] = -digits[pos]
                rest += exp[j]
                pos += 1
            exp[lo] = deg - rest
        return tuple(exp)

    def epack(self, key: int) -> int:
        """Packed exponent word of a monomial key (memoized)."""
        p = self._exp_cache.get(key)
        if p is None:
            exp = self.exponents(key)
            if max(exp) > _MAX_EXP or min(exp) < 0:
                raise ResourceExceeded("degree", f"exponent out of range in {exp}")
            p = self.packed(exp)
            self._exp_cache[key] = p
        return p

    def degree(self, key: int) -> int:
        d = self._deg_cache.get(key)
        if d is None:
            d = sum(self.exponents(key))
            self._deg_cache[key] = d
        return d

    def divides(self, a: int, b: int) -> bool:
        """Does packed monomial ``a`` divide packed monomial ``b``?"""
        g = self.guard
        return ((b | g) - a) & g == g

    def lcm_packed(self, a: int, b: int) -> int:
        out = 0
        mask = _BASE - 1
        for s in self.shifts:
            x = (a >> s) & mask
            y = (b >> s) & mask
            out |= (x if x > y else y) << s
        return out

    def key_of_packed(self, p: int) -> int:
        return self.key(self.exponents_of_packed(p))

    # -- conversion -------------------------------------------------------

    def from_poly(self, f: Polynomial) -> dict[int, int]:
        """Integer-key dict of ``f`` scaled to coprime integer coefficients."""
        if not f.terms:
            return {}
        den = 1
        for c in f.terms.values():
            den = math.lcm(den, c.denominator)
        out = {}
        key = self.key
        for e, c in f.terms.items():
            if max(e) > _MAX_EXP:
                raise ResourceExceeded("degree", "input exponent too large")
            out[key(e)] = (c.numerator * (den // c.denominator))
        return _primitive(out)

    def to_poly(self, terms: dict[int, int], variables: Sequence[str]) -> Polynomial:
        return Polynomial._raw(tuple(variables), {self.exponents(k): Fraction(c) for k, c in terms.items()})


def _primitive(terms: dict[int, int]) -> dict[int, int]:
    """Divide by the content and make the leading coefficient positive."""
    if not terms:
        return terms
    g = math.gcd(*terms.values())
    if terms[max(terms)] < 0:
        g = -g
    if g != 1:
        terms = {k: c // g for k, c in terms.items()}
    return terms


class _Elem:
    """A basis element: sorted terms plus cached leading data."""

    __slots__ = ("keys", "coefs", "lead", "lpack", "lc", "sugar", "deg", "alive")

    def __init__(self, terms: dict[int, int], ring: _Ring, sugar: int):
        keys = sorted(terms, reverse=True)
        self.keys = keys
        self.coefs = [terms[k] for k in keys]
        self.lead = keys[0]
        self.lc = self.coefs[0]
        self.lpack = ring.epack(self.lead)
        self.deg = ring.degree(self.lead)
        self.sugar = sugar
        self.alive = True

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.keys, self.coefs))


class _Engine:
    def __init__(self, ring: _Ring, limits: Limits, stats: Stats):
        self.ring = ring
        self.limits = limits
        self.stats = stats
        self.basis: list[_Elem] = []
        self.deadline = None if limits.timeout is None else time.monotonic() + limits.timeout
        self._reducer_cache: dict[int, int] = {}
        self._reducers: list[_Elem] = []

    def check_time(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise ResourceExceeded("time", f"{self.limits.timeout}s")

    def set_reducers(self, elems: list[_Elem]):
        self._reducers = elems
        self._reducer_cache = {}

    def add_reducer(self, elem: _Elem):
        self._reducers.append(elem)
        # cached misses may now have a divisor
        self._reducer_cache = {k: v for k, v in self._reducer_cache.items() if v >= 0}

    def find_reducer(self, key: int) -> int:
        idx = self._reducer_cache.get(key)
        if idx is not None:
            return idx
        ring = self.ring
        p = ring.epack(key)
        g = ring.guard
        best = -1
        best_len = None
        for i, e in enumerate(self._reducers):
            if ((p | g) - e.lpack) & g == g and e.alive:
                n = len(e.keys)
                if best < 0 or n < best_len:
                    best, best_len = i, n
        self._reducer_cache[key] = best
        return best

    def reduce(self, f: dict[int, int], full: bool = True) -> dict[int, int]:
        """Fraction-free reduction of ``f`` by the current reducers.

        The result is primitive (coprime integer coefficients, positive
        leading coefficient), equal to a nonzero rational multiple of the
        true normal form.
        """
        f = dict(f)
        if not f:
            return f
        heap = [-k for k in f]
        heapq.heapify(heap)
        rem: dict[int, int] = {}
        reducers = self._reducers
        find = self.find_reducer
        steps = 0
        while heap:
            k = -heapq.heappop(heap)
            c = f.pop(k, None)
            if c is None:
                continue
            idx = find(k)
            if idx < 0:
                rem[k] = c
                if not full:
                    # irreducible head: keep the tail as is
                    rem.update(f)
                    break
                continue
            g = reducers[idx]
            lc = g.lc
            d = math.gcd(c, lc)
            a = lc // d
            b = c // d
            if a < 0:
                a, b = -a, -b
            if a != 1:
                for kk in f:
                    f[kk] *= a
                for kk in rem:
                    rem[kk] *= a
            q = k - g.lead
            keys = g.keys
            coefs = g.coefs
            for i in range(1, len(keys)):
                kk = q + keys[i]
                v = f.get(kk)
                if v is None:
                    f[kk] = -b * coefs[i]
                    heapq.heappush(heap, -kk)
                else:
                    v -= b * coefs[i]
                    if v:
                        f[kk] = v
                    else:
                        del f[kk]
            steps += 1
            if a != 1:
                cont = math.gcd(*f.values(), *rem.values())
                if cont > 1:
                    for kk in f:
                        f[kk] //= cont
                    for kk in rem:
                        rem[kk] //= cont
            if steps & 63 == 0:
                self.check_time()
        return _primitive(rem)

    # -- Buchberger ---------------------------------------------------------

    def spoly(self, gi: _Elem, gj: _Elem) -> tuple[dict[int, int], int]:
        ring = self.ring
        lpack = ring.lcm_packed(gi.lpack, gj.lpack)
        lkey = ring.key_of_packed(lpack)
        qi = lkey - gi.lead
        qj = lkey - gj.lead
        d = math.gcd(gi.lc, gj.lc)
        ai = gj.lc // d
        aj = gi.lc // d
        out: dict[int, int] = {}
        for kk, c in zip(gi.keys[1:], gi.coefs[1:]):
            out[qi + kk] = ai * c
        for kk, c in zip(gj.keys[1:], gj.coefs[1:]):
            key = qj + kk
            v = out.get(key, 0) - aj * c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        ldeg = ring.degree(lkey)
        sugar = max(gi.sugar + ldeg - gi.deg, gj.sugar + ldeg - gj.deg)
        return out, sugar

    def run(self, generators: list[dict[int, int]]):
        ring = self.ring
        limits = self.limits
        stats = self.stats
        basis = self.basis
        self.set_reducers(basis)
        pairs: list = []  # heap of (lcm degree, sugar, lcm key, i, j)
        counter = 0

        def degree_of(terms):
            return max(ring.degree(k) for k in terms)

        def insert(terms, sugar):
            nonlocal counter
            elem = _Elem(terms, ring, sugar)
            d = max(ring.degree(k) for k in elem.keys)
            if d > limits.max_degree:
                raise ResourceExceeded("degree", f"basis element of degree {d}")
            stats.max_degree = max(stats.max_degree, d)
            self._update(pairs, elem)
            basis.append(elem)
            self._forget_misses()

        # sort inputs so small leading terms go first; this lets early
        # elements reduce later ones before pairs are formed
        gens = [g for g in generators if g]
        gens.sort(key=lambda t: max(t))
        for g in gens:
            r = self.reduce(g)
            if r:
                insert(r, degree_of(r))

        while pairs:
            ldeg, sugar, lkey, i, j = heapq.heappop(pairs)
            gi, gj = basis[i], basis[j]
            stats.pairs_processed += 1
            if stats.pairs_processed > limits.max_pairs:
                raise ResourceExceeded("pairs", f"more than {limits.max_pairs} pairs")
            if ldeg > limits.max_degree:
                raise ResourceExceeded("degree", f"S-pair of degree {ldeg}")
            self.check_time()
            s, sugar = self.spoly(gi, gj)
            r = self.reduce(s)
            if not r:
                stats.zero_reductions += 1
                continue
            insert(r, sugar)

    def _forget_misses(self):
        # the basis list doubles as the reducer list; only cached misses go stale
        self._reducer_cache = {k: v for k, v in self._reducer_cache.items() if v >= 0}

    def _update(self, pairs: list, h: _Elem):
        """Gebauer-Moeller pair update for a new element ``h``."""
        ring = self.ring
        basis = self.basis
        t = len(basis)
        hp = h.lpack
        guard = ring.guard
        stats = self.stats

        def div(a, b):
            return ((b | guard) - a) & guard == guard

        # candidate new pairs (i, t)
        cand = []
        for i, g in enumerate(basis):
            if not g.alive:
                continue
            lp = ring.lcm_packed(g.lpack, hp)
            coprime = lp == (g.lpack + hp)
            cand.append((i, lp, coprime))

        # chain criterion against the new element, on existing pairs
        if pairs:
            kept = []
            for entry in pairs:
                _, _, lkey, i, j = entry
                lp = ring.epack(lkey)
                if div(hp, lp):
                    li = ring.lcm_packed(basis[i].lpack, hp)
                    lj = ring.lcm_packed(basis[j].lpack, hp)
                    if li != lp and lj != lp:
                        stats.pairs_pruned += 1
                        continue
                kept.append(entry)
            if len(kept) != len(pairs):
                pairs[:] = kept
                heapq.heapify(pairs)

        # among new pairs: drop those whose lcm is a proper multiple of another
        # new lcm; for equal lcms keep one (and none if any of them is coprime)
        by_lcm: dict[int, list] = {}
        for i, lp, coprime in cand:
            by_lcm.setdefault(lp, []).append((i, coprime))
        lcms = sorted(by_lcm, key=ring.key_of_packed)
        minimal: list[int] = []
        for lp in lcms:
            if any(div(m, lp) for m in minimal):
                stats.pairs_pruned += len(by_lcm[lp])
                continue
            minimal.append(lp)
        for lp in minimal:
            group = by_lcm[lp]
            if any(coprime for _, coprime in group):
                stats.pairs_pruned += len(group)
                continue
            stats.pairs_pruned += len(group) - 1
            i = min(i for i, _ in group)
            lkey = ring.key_of_packed(lp)
            ldeg = ring.degree(lkey)
            g = basis[i]
            sugar = max(g.sugar + ldeg - g.deg, h.sugar + ldeg - h.deg)
            heapq.heappush(pairs, (ldeg, sugar, lkey, i, t))

        # elements whose leading term is divisible by the new one are
        # redundant for future pairs (their existing pairs stay valid)
        for g in basis:
            if g.alive and div(hp, g.lpack):
                g.alive = False

    def reduced_basis(self) -> list[dict[int, int]]:
        """Minimalize and inter-reduce the current basis."""
        elems = sorted(self.basis, key=lambda e: e.lead)
        minimal: list[_Elem] = []
        for e in elems:
            if not any(self.ring.divides(m.lpack, e.lpack) for m in minimal):
                minimal.append(e)
        out = []
        for idx, e in enumerate(minimal):
            self.set_reducers(minimal[:idx] + minimal[idx + 1 :])
            out.append(self._reduce_tail(e))
        return out

    def _reduce_tail(self, e: _Elem) -> dict[int, int]:
        """``e`` with its tail fully reduced, leading term kept."""
        f = dict(zip(e.keys, e.coefs))
        k = e.lead
        c = f.pop(k)
        num, den, nf = self._reduce_tail_exact(f)
        out = {kk: v * num for kk, v in nf.items()}
        out[k] = c * den
        return _primitive(out)

    def _reduce_tail_exact(self, f: dict[int, int]):
        """Return ``(num, den, r)`` with ``NF(f) = (num/den) * r`` exactly."""
        if not f:
            return 1, 1, {}
        # track the accumulated scalar alongside the fraction-free run
        f = dict(f)
        heap = [-k for k in f]
        heapq.heapify(heap)
        rem: dict[int, int] = {}
        scale_num, scale_den = 1, 1  # true remainder = rem * scale_num / scale_den
        find = self.find_reducer
        reducers = self._reducers
        while heap:
            k = -heapq.heappop(heap)
            c = f.pop(k, None)
            if c is None:
                continue
            idx = find(k)
            if idx < 0:
                rem[k] = c
                continue
            g = reducers[idx]
            d = math.gcd(c, g.lc)
            a = g.lc // d
            b = c // d
            if a < 0:
                a, b = -a, -b
            if a != 1:
                for kk in f:
                    f[kk] *= a
                for kk in rem:
                    rem[kk] *= a
                scale_den *= a
            q = k - g.lead
            for kk0, cc in zip(g.keys[1:], g.coefs[1:]):
                kk = q + kk0
                v = f.get(kk)
                if v is None:
                    f[kk] = -b * cc
                    heapq.heappush(heap, -kk)
                else:
                    v -= b * cc
                    if v:
                        f[kk] = v
                    else:
                        del f[kk]
            if a != 1:
                cont = math.gcd(*f.values(), *rem.values())
                if cont > 1:
                    for kk in f:
                        f[kk] //= cont
                    for kk in rem:
                        rem[kk] //= cont
                    scale_num *= cont
            g2 = math.gcd(scale_num, scale_den)
            if g2 > 1:
                scale_num //= g2
                scale_den //= g2
        return scale_num, scale_den, rem


# ---------------------------------------------------------------------------
# public API


class Ideal:
    """Generators of a polynomial ideal over a shared variable list."""

    def __init__(self, generators: Iterable[Polynomial], variables: Sequence[str] | None = None):
        gens = list(generators)
        if variables is None:
            if not gens:
                raise ValueError("an ideal needs a variable list or at least one generator")
            variables = gens[0].variables
        variables = tuple(variables)
        for g in gens:
            if g.variables != variables:
                raise VariableMismatch(f"generator over {g.variables}, expected {variables}")
        self.variables = variables
        self.generators = [g for g in gens if g]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


@dataclass
class GroebnerBasis:
    """A reduced Gröbner basis.

    Elements are primitive integer polynomials (coprime coefficients,
    positive leading coefficient) sorted by increasing leading monomial.
    """

    polys: list[Polynomial]
    order: MonomialOrder
    variables: tuple[str, ...]
    stats: Stats = field(default_factory=Stats)

    def __post_init__(self):
        self._ring = _Ring(len(self.variables), self.order)
        self._elems = [_Elem(self._ring.from_poly(p), self._ring, int(p.degree())) for p in self.polys]

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def is_unit(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].is_constant()

    def leading_monomials(self) -> list[tuple]:
        return [p.leading_term(self.order)[1] for p in self.polys]

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def dump(self) -> str:
        lines = [f"# order: {self.order}", f"# variables: {','.join(self.variables)}"]
        lines += [p.to_str(self.order) for p in self.polys]
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, text: str) -> "GroebnerBasis":
        order = None
        variables = None
        polys_text = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("# order:"):
                order = MonomialOrder.parse(line.split(":", 1)[1])
            elif line.startswith("# variables:"):
                variables = tuple(v.strip() for v in line.split(":", 1)[1].split(",") if v.strip())
            elif line.startswith("#"):
                continue
            else:
                polys_text.append(line)
        if order is None or variables is None:
            raise ValueError("basis dump is missing its order/variables header")
        polys = [Polynomial.parse(t, variables) for t in polys_text]
        return cls(polys, order, variables)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Exact remainder of ``f`` on division by ``G``.

    Unlike the internal fraction-free reduction, the result is the true
    remainder (not just up to a scalar), so ``f - normal_form(f, G)`` lies
    in the ideal.
    """
    if f.variables != G.variables:
        raise VariableMismatch(f"{f.variables} vs {G.variables}")
    if not f.terms:
        return f
    ring = G._ring
    scale, fi = _scaled_ints(f, ring)
    eng = _Engine(ring, Limits(timeout=None), Stats())
    eng.set_reducers(G._elems)
    num, den, rem = eng._reduce_tail_exact(fi)
    out = {ring.exponents(k): Fraction(c * num, den) / scale for k, c in rem.items()}
    return Polynomial(G.variables, out)


def _scaled_ints(f: Polynomial, ring: _Ring) -> tuple[int, dict[int, int]]:
    den = 1
    for c in f.terms.values():
        den = math.lcm(den, c.denominator)
    return den, {ring.key(e): c.numerator * (den // c.denominator) for e, c in f.terms.items()}


def buchberger(
    ideal: Ideal | Sequence[Polynomial],
    order: MonomialOrder = GREVLEX,
    limits: Limits | None = None,
) -> GroebnerBasis:
    """Reduced Gröbner basis of ``ideal`` under ``order``.

    Raises :class:`ResourceExceeded` when a cap in ``limits`` is hit.
    """
    if not isinstance(ideal, Ideal):
        ideal = Ideal(ideal)
    limits = limits or Limits()
    stats = Stats()
    t0 = time.monotonic()
    ring = _Ring(len(ideal.variables), order)
    eng = _Engine(ring, limits, stats)
    gens = [ring.from_poly(g) for g in ideal.generators]
    eng.run(gens)
    reduced = eng.reduced_basis() if eng.basis else []
    reduced.sort(key=lambda t: max(t))
    polys = [ring.to_poly(t, ideal.variables) for t in reduced]
    stats.basis_size = len(polys)
    stats.seconds = time.monotonic() - t0
    return GroebnerBasis(polys, order, ideal.variables, stats)


def contains_one(ideal: Ideal | Sequence[Polynomial], order: MonomialOrder = GREVLEX, limits: Limits | None = None) -> bool:
    """True iff 1 lies in the ideal (the reduced basis is ``{1}``)."""
    return buchberger(ideal, order, limits).is_unit()


def elimination_ideal(
    ideal: Ideal | Sequence[Polynomial],
    keep: Sequence[str],
    limits: Limits | None = None,
    return_basis: bool = False,
):
    """Generators of ``ideal ∩ Q[keep]`` as polynomials over ``keep``.

    Uses a block order with every non-kept variable in the eliminated
    block.  With ``return_basis`` the full block-order basis (over the
    reordered variables) is returned as well.
    """
    if not isinstance(ideal, Ideal):
        ideal = Ideal(ideal)
    keep = tuple(keep)
    for v in keep:
        if v not in ideal.variables:
            raise ValueError(f"kept variable {v!r} not in {ideal.variables}")
    elim = tuple(v for v in ideal.variables if v not in keep)
    kept_sorted = tuple(v for v in ideal.variables if v in keep)
    reordered = elim + kept_sorted
    order = MonomialOrder.block(len(elim))
    gens = [g.embed(reordered) for g in ideal.generators]
    G = buchberger(Ideal(gens, reordered), order, limits)
    out = []
    k = len(elim)
    for p in G.polys:
        if all(not any(e[:k]) for e in p.terms):
            out.append(Polynomial(kept_sorted, {e[k:]: c for e, c in p.terms.items()}).embed(kept_sorted))
    if return_basis:
        return out, G
    return out


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    """Plain rational S-polynomial (used by verification passes)."""
    cf, ef = f.leading_term(order)
    cg, eg = g.leading_term(order)
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    mf = Polynomial(f.variables, {tuple(l - a for l, a in zip(lcm, ef)): 1 / cf})
    mg = Polynomial(g.variables, {tuple(l - a for l, a in zip(lcm, eg)): 1 / cg})
    return mf * f - mg * g


def is_groebner_basis(G: GroebnerBasis) -> bool:
    """Buchberger's criterion checked over *all* pairs, with no pruning."""
    polys = G.polys
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if not normal_form(s_polynomial(polys[i], polys[j], G.order), G).is_zero():
                return False
    return True


def is_reduced(G: GroebnerBasis) -> bool:
    """No term of any element is divisible by another element's leading monomial."""
    leads = G.leading_monomials()
    for i, p in enumerate(G.polys):
        for e in p.terms:
            for j, l in enumerate(leads):
                if i != j and all(a >= b for a, b in zip(e, l)):
                    return False
    return True
