"""Bivariate skew polynomials over a finite ring with Laurent (ℤ²) exponents.

Multiplication follows ``a x^i y^j ⋆ b x^r y^s = a ρ^i θ^j(b) x^(i+r) y^(j+s)``
for all integer i, j, so the same arithmetic houses both ordinary polynomials
and the images of :func:`psi`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple

import numpy as np

from .errors import (
    NoDegreeError,
    TheoremViolation,
    UnsupportedDivisorError,
    UsageError,
)
from .ring import ENUMERATION_CAP, AutomorphismPair, Element, RingSpec, iter_codes

Exp = tuple[int, int]


# -- exponent orders ---------------------------------------------------------


def geq(e: Exp, f: Exp) -> bool:
    """Componentwise partial order ``≥``."""
    return e[0] >= f[0] and e[1] >= f[1]


def lex_geq(e: Exp, f: Exp) -> bool:
    """Total order ``⇒``: compare the y-exponent first, then x."""
    return e[1] > f[1] or (e[1] == f[1] and e[0] >= f[0])


def lex_gt(e: Exp, f: Exp) -> bool:
    """Strict version ``→`` of :func:`lex_geq`."""
    return e[1] > f[1] or (e[1] == f[1] and e[0] > f[0])


def lex_key(e: Exp) -> tuple[int, int]:
    return (e[1], e[0])


class QuasiDegree(NamedTuple):
    i: int
    j: int

    def geq(self, other: Exp) -> bool:
        return geq(self, other)

    def lex_geq(self, other: Exp) -> bool:
        return lex_geq(self, other)

    def lex_gt(self, other: Exp) -> bool:
        return lex_gt(self, other)

    def __add__(self, other):  # componentwise, not tuple concatenation
        return QuasiDegree(self.i + other[0], self.j + other[1])

    def __sub__(self, other):
        return QuasiDegree(self.i - other[0], self.j - other[1])


# -- the ring ----------------------------------------------------------------


@dataclass(frozen=True)
class SkewRing:
    """The skew polynomial ring R[x, y; ρ, θ]."""

    ring: RingSpec
    autos: AutomorphismPair = AutomorphismPair()

    def __post_init__(self):
        self.autos.validate(self.ring)

    def twist(self, code: int, i: int, j: int) -> int:
        return self.ring.frobenius_code(code, self.autos.exponent(i, j))

    def poly(self, terms: Mapping[Exp, Element | int | str] | None = None) -> "SkewPoly":
        return SkewPoly(self, terms or {})

    @property
    def zero(self) -> "SkewPoly":
        return SkewPoly._raw(self, {})

    @property
    def one(self) -> "SkewPoly":
        return SkewPoly._raw(self, {(0, 0): 1})

    @property
    def x(self) -> "SkewPoly":
        return SkewPoly._raw(self, {(1, 0): 1})

    @property
    def y(self) -> "SkewPoly":
        return SkewPoly._raw(self, {(0, 1): 1})

    def const(self, c) -> "SkewPoly":
        return self.monomial(c, 0, 0)

    def monomial(self, c, i: int, j: int) -> "SkewPoly":
        return SkewPoly(self, {(i, j): c})

    def parse(self, text: str) -> "SkewPoly":
        return _parse_poly(self, text)

    def from_json(self, data: dict | str) -> "SkewPoly":
        if isinstance(data, str):
            return self.parse(data)
        return SkewPoly(self, {(int(t["i"]), int(t["j"])): t["c"] for t in data["terms"]})

    def from_dense(self, arr: np.ndarray) -> "SkewPoly":
        """Polynomial with coefficient codes ``arr[i, j]`` at x^i y^j."""
        rows, cols = np.nonzero(arr)
        return SkewPoly._raw(self, {(int(i), int(j)): int(arr[i, j]) for i, j in zip(rows, cols)})

    def random_poly(self, rng: np.random.Generator, shape: tuple[int, int], nonzero: bool = False) -> "SkewPoly":
        """Uniform coefficients on the box [0, shape[0]) × [0, shape[1])."""
        while True:
            f = self.from_dense(rng.integers(0, self.ring.size, size=shape))
            if not (nonzero and f.is_zero()):
                return f


class SkewPoly:
    """An immutable, finitely supported map ℤ² → R \\ {0} with star product."""

    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx: SkewRing, terms: Mapping[Exp, Element | int | str]):
        ring = ctx.ring
        clean: dict[Exp, int] = {}
        for (i, j), c in terms.items():
            if isinstance(c, Element):
                ring._check(c)
                code = c.code
            else:
                code = ring(c).code
            if code:
                clean[(int(i), int(j))] = code
        self.ctx = ctx
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ctx: SkewRing, terms: dict[Exp, int]) -> "SkewPoly":
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj._terms = {e: c for e, c in terms.items() if c}
        obj._hash = None
        return obj

    # -- inspection -----------------------------------------------------------

    @property
    def ring(self) -> RingSpec:
        return self.ctx.ring

    @property
    def codes(self) -> dict[Exp, int]:
        """Copy of the support map with coefficient codes."""
        return dict(self._terms)

    def support(self) -> list[Exp]:
        return sorted(self._terms, key=lex_key, reverse=True)

    def terms(self) -> Iterator[tuple[Exp, Element]]:
        for e in self.support():
            yield e, Element(self.ring, self._terms[e])

    def coeff(self, i: int, j: int) -> Element:
        return Element(self.ring, self._terms.get((i, j), 0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_ordinary(self) -> bool:
        return all(i >= 0 and j >= 0 for i, j in self._terms)

    def quasi_degree(self) -> QuasiDegree:
        if not self._terms:
            raise NoDegreeError("the zero polynomial has no quasi-degree")
        return QuasiDegree(*max(self._terms, key=lex_key))

    def leading_coefficient(self) -> Element:
        d = self.quasi_degree()
        return Element(self.ring, self._terms[d])

    def is_monic(self) -> bool:
        return self.leading_coefficient().code == 1

    def box(self) -> tuple[int, int]:
        """(max i + 1, max j + 1) over the support; (0, 0) for zero."""
        if not self._terms:
            return (0, 0)
        return (max(i for i, _ in self._terms) + 1, max(j for _, j in self._terms) + 1)

    def to_dense(self, shape: tuple[int, int] | None = None) -> np.ndarray:
        if not self.is_ordinary():
            raise UsageError("only ordinary polynomials have a dense form")
        shape = shape or self.box()
        arr = np.zeros(shape, dtype=np.int64)
        for (i, j), c in self._terms.items():
            if i >= shape[0] or j >= shape[1]:
                raise UsageError(f"term x^{i}y^{j} does not fit in shape {shape}")
            arr[i, j] = c
        return arr

    # -- arithmetic -----------------------------------------------------------

    def _same(self, other: "SkewPoly") -> None:
        if self.ctx != other.ctx:
            raise UsageError("skew polynomials over different rings or automorphisms")

    def _lift(self, other) -> "SkewPoly":
        if isinstance(other, SkewPoly):
            self._same(other)
            return other
        if isinstance(other, (Element, int, np.integer, str)):
            return self.ctx.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        add = self.ring.add_codes
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = add(out.get(e, 0), c)
        return SkewPoly._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.neg_code
        return SkewPoly._raw(self.ctx, {e: neg(c) for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return star_mul(self, other)

    def __rmul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return star_mul(other, self)

    def __pow__(self, e: int):
        if e < 0:
            raise UsageError("negative powers are not defined")
        acc = self.ctx.one
        for _ in range(e):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.ctx == other.ctx and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- text / json ----------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in ((e, self._terms[e]) for e in self.support()):
            mono = []
            if i:
                mono.append("x" if i == 1 else f"x^{i}")
            if j:
                mono.append("y" if j == 1 else f"y^{j}")
            coef = self.ring.format_code(c)
            if coef != "1" or not mono:
                mono.insert(0, coef)
            parts.append("*".join(mono))
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "terms": [
                {"i": i, "j": j, "c": self.ring.format_code(self._terms[(i, j)])}
                for i, j in self.support()
            ]
        }

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"SkewPoly({self.to_text()!r})"


# -- parsing -----------------------------------------------------------------

_VAR = re.compile(r"\s*([xy])\s*(?:\^\s*(-?\d+))?\s*")


def _split_top(text: str, seps: str) -> list[tuple[str, str]]:
    """Split at depth 0 on any char in ``seps``; returns (separator, chunk)."""
    out, depth, cur, sep = [], 0, [], ""
    prev = ""
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in seps and not (ch == "-" and prev == "^"):
            out.append((sep, "".join(cur)))
            cur, sep = [], ch
        else:
            cur.append(ch)
        if not ch.isspace():
            prev = ch
    out.append((sep, "".join(cur)))
    return out


def _parse_poly(ctx: SkewRing, text: str) -> SkewPoly:
    ring = ctx.ring
    total: dict[Exp, int] = {}
    chunks = _split_top(text, "+-")
    for sep, chunk in chunks:
        if not chunk.strip():
            if sep == "" or not chunks:
                continue
            raise UsageError(f"empty term in {text!r}")
        i = j = 0
        coef = 1
        for _, factor in _split_top(chunk, "*"):
            m = _VAR.fullmatch(factor)
            if m:
                k = int(m.group(2)) if m.group(2) else 1
                if m.group(1) == "x":
                    i += k
                else:
                    j += k
            else:
                if not factor.strip():
                    raise UsageError(f"empty factor in {text!r}")
                coef = ring.mul_codes(coef, ring.parse(factor).code)
        if sep == "-":
            coef = ring.neg_code(coef)
        total[(i, j)] = ring.add_codes(total.get((i, j), 0), coef)
    if not any(chunk.strip() for _, chunk in chunks):
        raise UsageError("empty polynomial text")
    return SkewPoly._raw(ctx, total)


# -- operations ----------------------------------------------------------------


def add(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    f._same(g)
    return f + g


def star_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Bilinear extension of the monomial rule ``ax^iy^j ⋆ bx^ry^s``."""
    f._same(g)
    ctx, ring = f.ctx, f.ring
    out: dict[Exp, int] = {}
    if ring.has_tables:
        add, mul, frob = ring._add_list, ring._mul_list, ring._frob_list
        m = len(frob)
        for (i, j), a in f._terms.items():
            perm = frob[ctx.autos.exponent(i, j) % m]
            row = mul[a]
            for (r, s), b in g._terms.items():
                key = (i + r, j + s)
                out[key] = add[out.get(key, 0)][row[perm[b]]]
        return SkewPoly._raw(ctx, out)
    addc, mulc, frob = ring.add_codes, ring.mul_codes, ring.frobenius_code
    for (i, j), a in f._terms.items():
        e = ctx.autos.exponent(i, j)
        for (r, s), b in g._terms.items():
            key = (i + r, j + s)
            out[key] = addc(out.get(key, 0), mulc(a, frob(b, e)))
    return SkewPoly._raw(ctx, out)


def right_divide(f1: SkewPoly, f2: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Return (h, g) with ``f1 = h ⋆ f2 + g`` and no support pair of g ≥ deg(f2).

    Repeatedly cancels the ⇒-greatest term of the running remainder whose
    exponent is componentwise ≥ deg(f2).
    """
    f1._same(f2)
    if f2.is_zero():
        raise UsageError("division by the zero polynomial")
    if not f2.is_monic():
        raise UnsupportedDivisorError("divisor must be monic")
    if not (f1.is_ordinary() and f2.is_ordinary()):
        raise UsageError("right division needs ordinary (non-Laurent) polynomials")
    ring, ctx = f1.ring, f1.ctx
    addc, mulc, negc, frob = ring.add_codes, ring.mul_codes, ring.neg_code, ring.frobenius_code
    d1, d2 = f2.quasi_degree()
    divisor = list(f2._terms.items())
    rem = dict(f1._terms)
    quot: dict[Exp, int] = {}
    while True:
        best = None
        for e in rem:
            if e[0] >= d1 and e[1] >= d2 and (best is None or lex_key(e) > lex_key(best)):
                best = e
        if best is None:
            break
        c = rem[best]
        a, b = best[0] - d1, best[1] - d2
        quot[(a, b)] = addc(quot.get((a, b), 0), c)
        nc = negc(c)
        ex = ctx.autos.exponent(a, b)
        for (u, v), gc in divisor:
            key = (a + u, b + v)
            val = addc(rem.get(key, 0), mulc(nc, frob(gc, ex)))
            if val:
                rem[key] = val
            else:
                rem.pop(key, None)
    return SkewPoly._raw(ctx, quot), SkewPoly._raw(ctx, rem)


def right_divides(g: SkewPoly, f: SkewPoly) -> bool:
    return right_divide(f, g)[1].is_zero()


def is_central(f: SkewPoly, cap: int = ENUMERATION_CAP) -> bool:
    """Commutes with every constant and with x and y.

    Constants, x and y generate R[x,y;ρ,θ] as a ring, so this decides
    membership in the center.
    """
    ctx = f.ctx
    for code in iter_codes(ctx.ring, cap):
        c = SkewPoly._raw(ctx, {(0, 0): code})
        if f * c != c * f:
            return False
    return f * ctx.x == ctx.x * f and f * ctx.y == ctx.y * f


def psi(f: SkewPoly) -> SkewPoly:
    """ψ(Σ a x^i y^j) = Σ x^-i y^-j a, written with left coefficients:
    Σ ρ^-i θ^-j(a) x^-i y^-j."""
    if not f.is_ordinary():
        raise UsageError("psi is defined on ordinary polynomials")
    ctx = f.ctx
    return SkewPoly._raw(
        ctx, {(-i, -j): ctx.twist(c, -i, -j) for (i, j), c in f._terms.items()}
    )


def mccoy_annihilator(f: SkewPoly, g: SkewPoly, cap: int = ENUMERATION_CAP) -> Element:
    """Nonzero r with ``f ⋆ r = 0``, given a nonzero g with ``f ⋆ g = 0``.

    Requires every coefficient of f to be fixed by ρ and θ.  Found by
    exhaustive search; failure would contradict the McCoy-type theorem and
    raises :class:`TheoremViolation`.
    """
    f._same(g)
    ring, ctx = f.ring, f.ctx
    if ring.is_field:
        raise UsageError(
            "fields have no zero divisors: f*g = 0 with g != 0 forces f = 0 "
            "and every r annihilates it"
        )
    if g.is_zero():
        raise UsageError("g must be nonzero")
    for c in f._terms.values():
        if not ctx.autos.is_fixed(Element(ring, c), "rho", "theta"):
            raise UsageError("f must have coefficients fixed by rho and theta")
    if not (f * g).is_zero():
        raise UsageError("f * g is not zero")
    for r in iter_codes(ring, cap):
        if r and (f * SkewPoly._raw(ctx, {(0, 0): r})).is_zero():
            return Element(ring, r)
    raise TheoremViolation(f"no nonzero r annihilates {f} although f*g = 0 for g = {g}")


def polys_from_codes(ctx: SkewRing, rows: Iterable[np.ndarray]) -> list[SkewPoly]:
    return [ctx.from_dense(r) for r in rows]
