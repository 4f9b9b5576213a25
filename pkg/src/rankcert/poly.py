"""Sparse multivariate polynomials over the rationals.

A :class:`Polynomial` is an immutable mapping from exponent tuples to
nonzero ``Fraction`` coefficients over a fixed, ordered tuple of variable
names.  Monomial orders are separate values (:class:`MonomialOrder`) so the
same polynomial can be viewed under grevlex, lex or a block elimination
order.

Text format (used by the CLI and the golden files)::

    3*x11^2*x12 - 7/33*x44 + 5

Terms are ``coefficient*var^exp*...``; whitespace is ignored.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .exactnum import format_rational

Monomial = tuple  # exponent vector, one nonnegative int per variable
Scalar = Union[int, Fraction]

NEG_INF = float("-inf")


class VariableMismatch(ValueError):
    """Two polynomials over different variable sets were combined."""


class PolynomialParseError(ValueError):
    """Malformed polynomial text; the message names the offending token."""


def make_variables(names: Iterable[str]) -> tuple[str, ...]:
    """Validate and freeze an ordered list of variable names."""
    names = tuple(names)
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate variable names in {names}")
    for name in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
            raise ValueError(f"invalid variable name {name!r}")
    return names


# ---------------------------------------------------------------------------
# monomial orders


def _grevlex_key(exp: Sequence[int]) -> tuple:
    return (sum(exp),) + tuple(-e for e in reversed(exp))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on exponent vectors.

    ``kind`` is ``"grevlex"``, ``"lex"`` or ``"block"``.  For ``"block"``
    the first ``split`` variables form the eliminated block: monomials are
    compared by grevlex on that block first and by grevlex on the rest to
    break ties.
    """

    kind: str = "grevlex"
    split: int | None = None

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block":
            if self.split is None or self.split < 0:
                raise ValueError("block order needs a nonnegative split index")
        elif self.split is not None:
            raise ValueError(f"{self.kind} order takes no split index")

    @classmethod
    def block(cls, split: int) -> "MonomialOrder":
        return cls("block", split)

    def key(self, exp: Sequence[int]) -> tuple:
        """Sort key: ``a < b`` in the order iff ``key(a) < key(b)``."""
        if self.kind == "lex":
            return tuple(exp)
        if self.kind == "grevlex":
            return _grevlex_key(exp)
        k = self.split
        return _grevlex_key(exp[:k]) + _grevlex_key(exp[k:])

    def digit_weights(self, nvars: int) -> list[list[int]]:
        """Express the sort key as integer linear forms in the exponents.

        Returns one row per key digit; row ``j`` gives the coefficients of
        digit ``j`` as a linear function of the exponent vector.  Used by
        the Gröbner engine to turn each monomial into a single integer.
        """
        if self.kind == "lex":
            return [[int(i == j) for i in range(nvars)] for j in range(nvars)]
        if self.kind == "grevlex":
            blocks = [(0, nvars)]
        else:
            k = min(self.split, nvars)
            blocks = [(0, k), (k, nvars)]
        rows = []
        for lo, hi in blocks:
            if hi <= lo:
                continue
            rows.append([int(lo <= i < hi) for i in range(nvars)])
            # the first variable of a block is implied by degree and the rest
            for j in range(hi - 1, lo, -1):
                rows.append([-int(i == j) for i in range(nvars)])
        return rows

    def __str__(self) -> str:
        return self.kind if self.kind != "block" else f"block({self.split})"

    @classmethod
    def parse(cls, text: str) -> "MonomialOrder":
        m = re.fullmatch(r"\s*block\((\d+)\)\s*", text)
        if m:
            return cls.block(int(m.group(1)))
        return cls(text.strip())


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[Monomial, Scalar] | None = None):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean = {}
        if terms:
            for exp, c in terms.items():
                if c:
                    exp = tuple(exp)
                    if len(exp) != n:
                        raise ValueError(f"exponent {exp} does not match {n} variables")
                    clean[exp] = c if isinstance(c, Fraction) else Fraction(c)
        self.terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def _raw(cls, variables, terms):
        obj = cls.__new__(cls)
        obj.variables = variables
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "Polynomial":
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], c: Scalar) -> "Polynomial":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "Polynomial":
        variables = tuple(variables)
        try:
            i = variables.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}") from None
        exp = tuple(int(j == i) for j in range(len(variables)))
        return cls._raw(variables, {exp: Fraction(1)})

    @classmethod
    def gens(cls, variables: Sequence[str]) -> list["Polynomial"]:
        variables = make_variables(variables)
        return [cls.variable(variables, v) for v in variables]

    @classmethod
    def from_univariate(cls, coeffs: Sequence[Scalar], var: str = "x") -> "Polynomial":
        """Build from low-to-high coefficients ``[c0, c1, ...]``."""
        return cls((var,), {(i,): c for i, c in enumerate(coeffs) if c})

    # -- basic protocol ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.variables, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self.to_str()!r}, variables={list(self.variables)})"

    def __str__(self) -> str:
        return self.to_str()

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.variables != self.variables:
                raise VariableMismatch(f"{self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.variables, other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return Polynomial._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial._raw(self.variables, {})
            return Polynomial._raw(self.variables, {e: c * other for e, c in self.terms.items()})
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial._raw(self.variables, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Polynomial":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (1 / Fraction(other))

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- structure --------------------------------------------------------

    def degree(self):
        """Total degree; ``-inf`` for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str):
        i = self.variables.index(name)
        if not self.terms:
            return NEG_INF
        return max(e[i] for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def support_variables(self) -> tuple[str, ...]:
        """Variables that actually occur, in ring order."""
        used = [False] * len(self.variables)
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used[i] = True
        return tuple(v for v, u in zip(self.variables, used) if u)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list[tuple[Fraction, Monomial]]:
        """Terms as ``(coefficient, monomial)`` in strictly descending order."""
        key = order.key
        return [(self.terms[e], e) for e in sorted(self.terms, key=key, reverse=True)]

    def leading_term(self, order: MonomialOrder = GREVLEX) -> tuple[Fraction, Monomial]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return self.terms[e], e

    def primitive(self, order: MonomialOrder = GREVLEX) -> tuple[Fraction, "Polynomial"]:
        """Split into ``(content, primitive part)``.

        The primitive part has coprime integer coefficients and a positive
        leading coefficient under ``order``; ``self == content * part``.
        """
        if not self.terms:
            return Fraction(0), self
        den = 1
        for c in self.terms.values():
            den = math.lcm(den, c.denominator)
        ints = {e: int(c * den) for e, c in self.terms.items()}
        g = math.gcd(*ints.values())
        lc = ints[max(ints, key=order.key)]
        if lc < 0:
            g = -g
        part = Polynomial._raw(self.variables, {e: Fraction(c // g) for e, c in ints.items()})
        return Fraction(g, den), part

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        lc, _ = self.leading_term(order)
        return self / lc

    def integer_coefficients(self) -> dict[Monomial, int]:
        """Exponent -> int map; raises if any coefficient is not integral."""
        out = {}
        for e, c in self.terms.items():
            if c.denominator != 1:
                raise ValueError("polynomial has non-integer coefficients")
            out[e] = c.numerator
        return out

    # -- change of ring, substitution ------------------------------------

    def embed(self, variables: Sequence[str]) -> "Polynomial":
        """Re-express over another variable list (by name)."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        index = {v: i for i, v in enumerate(variables)}
        used = self.support_variables()
        for v in used:
            if v not in index:
                raise VariableMismatch(f"variable {v!r} missing from target set")
        pos = [index.get(v) for v in self.variables]
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(variables)
            for i, x in enumerate(e):
                if x:
                    ne[pos[i]] = x
            out[tuple(ne)] = c
        return Polynomial._raw(variables, out)

    def substitute(
        self,
        assignment: Mapping[str, Union["Polynomial", Scalar]],
        variables: Sequence[str] | None = None,
    ) -> "Polynomial":
        """Replace variables by polynomials (or numbers).

        The result lives over ``variables`` (default: this polynomial's
        variable set); unassigned variables map to themselves, and every
        image is embedded into the result's variable set by name.
        """
        target = tuple(variables) if variables is not None else self.variables
        for name in assignment:
            if name not in self.variables:
                raise ValueError(f"unknown variable {name!r} in assignment")
        images = []
        for v in self.variables:
            img = assignment.get(v)
            if img is None:
                if v in target:
                    img = Polynomial.variable(target, v)
                else:
                    img = None  # only an error if the variable is actually used
            elif isinstance(img, Polynomial):
                img = img.embed(target)
            else:
                img = Polynomial.constant(target, img)
            images.append(img)
        power_cache: dict[tuple[int, int], Polynomial] = {}

        def power(i, k):
            key = (i, k)
            p = power_cache.get(key)
            if p is None:
                if images[i] is None:
                    raise VariableMismatch(f"variable {self.variables[i]!r} has no image")
                p = images[i] ** k
                power_cache[key] = p
            return p

        result: dict = {}
        one = (0,) * len(target)
        for e, c in self.terms.items():
            term = {one: c}
            for i, k in enumerate(e):
                if k:
                    term = (Polynomial._raw(target, term) * power(i, k)).terms
            for te, tc in term.items():
                result[te] = result.get(te, 0) + tc
        return Polynomial._raw(target, {e: c for e, c in result.items() if c})

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a rational point (all used variables must be given)."""
        vals = []
        for v in self.variables:
            vals.append(Fraction(point[v]) if v in point else None)
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    if vals[i] is None:
                        raise KeyError(f"no value for variable {self.variables[i]!r}")
                    t *= vals[i] ** k
            total += t
        return total

    def univariate_coefficients(self) -> list[Fraction]:
        """Low-to-high coefficient list of a one-variable polynomial."""
        if len(self.variables) != 1:
            raise ValueError(f"expected a univariate polynomial, got variables {self.variables}")
        if not self.terms:
            return []
        d = max(e[0] for e in self.terms)
        out = [Fraction(0)] * (d + 1)
        for e, c in self.terms.items():
            out[e[0]] = c
        return out

    # -- text format ------------------------------------------------------

    def to_str(self, order: MonomialOrder = GREVLEX) -> str:
        if not self.terms:
            return "0"
        parts = []
        for c, e in self.sorted_terms(order):
            factors = []
            for v, k in zip(self.variables, e):
                if k == 1:
                    factors.append(v)
                elif k:
                    factors.append(f"{v}^{k}")
            mag = abs(c)
            if not factors:
                body = format_rational(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = format_rational(mag) + "*" + "*".join(factors)
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    @classmethod
    def parse(cls, text: str, variables: Sequence[str] | None = None) -> "Polynomial":
        """Parse the text format.

        If ``variables`` is omitted, the variables are the names that occur,
        in order of first appearance.
        """
        return _parse(text, variables)


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            bad = text[pos:].strip().split()[0] if text[pos:].strip() else text[pos:]
            raise PolynomialParseError(f"unexpected token {bad[:20]!r} at offset {pos}")
        tokens.append(m.group(m.lastindex))
        pos = m.end()
    return tokens


def _parse(text: str, variables: Sequence[str] | None) -> Polynomial:
    tokens = _tokenize(text)
    if not tokens:
        raise PolynomialParseError("empty polynomial text")
    # sum of monomial terms; each term is [sign] factor (* factor)*
    raw_terms: list[tuple[Fraction, dict[str, int]]] = []
    order_seen: list[str] = []
    i = 0
    n = len(tokens)

    def expect_int(j):
        if j >= n or not tokens[j].isdigit():
            got = tokens[j] if j < n else "end of input"
            raise PolynomialParseError(f"expected an integer, got {got!r}")
        return int(tokens[j])

    first = True
    while i < n:
        sign = 1
        if tokens[i] in "+-" and len(tokens[i]) == 1:
            sign = -1 if tokens[i] == "-" else 1
            i += 1
        elif not first:
            raise PolynomialParseError(f"expected '+' or '-', got {tokens[i]!r}")
        first = False
        coef = Fraction(sign)
        powers: dict[str, int] = {}
        expect_factor = True
        while i < n:
            tok = tokens[i]
            if expect_factor:
                if tok.isdigit():
                    num = int(tok)
                    i += 1
                    if i < n and tokens[i] == "/":
                        den = expect_int(i + 1)
                        if den == 0:
                            raise PolynomialParseError("zero denominator")
                        i += 2
                        coef *= Fraction(num, den)
                    else:
                        coef *= num
                elif tok[0].isalpha() or tok[0] == "_":
                    i += 1
                    k = 1
                    if i < n and tokens[i] in ("^", "**"):
                        k = expect_int(i + 1)
                        i += 2
                    powers[tok] = powers.get(tok, 0) + k
                    if tok not in order_seen:
                        order_seen.append(tok)
                else:
                    raise PolynomialParseError(f"unexpected token {tok!r}")
                expect_factor = False
            elif tok == "*":
                i += 1
                expect_factor = True
            else:
                break
        if expect_factor:
            raise PolynomialParseError("dangling operator at end of term")
        raw_terms.append((coef, powers))

    if variables is None:
        variables = tuple(order_seen)
    variables = tuple(variables)
    index = {v: j for j, v in enumerate(variables)}
    out: dict = {}
    for coef, powers in raw_terms:
        exp = [0] * len(variables)
        for v, k in powers.items():
            if v not in index:
                raise PolynomialParseError(f"unknown variable {v!r}")
            exp[index[v]] += k
        exp = tuple(exp)
        out[exp] = out.get(exp, 0) + coef
    return Polynomial(variables, out)


def dehomogenize(f: Polynomial, at: str) -> Polynomial:
    """Set the variable ``at`` to 1 in a bivariate polynomial.

    ``f`` must live over exactly two variables; the result is univariate in
    the other one.
    """
    if len(f.variables) != 2:
        raise ValueError(f"dehomogenize needs a bivariate polynomial, got variables {f.variables}")
    if at not in f.variables:
        raise ValueError(f"{at!r} is not a variable of {f.variables}")
    keep = 1 - f.variables.index(at)
    out: dict = {}
    for e, c in f.terms.items():
        k = (e[keep],)
        out[k] = out.get(k, 0) + c
    return Polynomial((f.variables[keep],), out)


def sum_polys(polys: Iterable[Polynomial], variables: Sequence[str]) -> Polynomial:
    out: dict = {}
    for p in polys:
        for e, c in p.terms.items():
            out[e] = out.get(e, 0) + c
    return Polynomial(variables, out)
