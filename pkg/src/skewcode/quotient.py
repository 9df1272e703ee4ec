"""The quotient rings R° (by x^l-λ1, y^s-λ2) and R◇ (by their product)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import kernels
from .errors import UsageError
from .poly import SkewPoly, SkewRing, right_divide
from .ring import AutomorphismPair, Element, RingSpec


@lru_cache(maxsize=256)
def _twist_table(ring: RingSpec, autos: AutomorphismPair, rows: int, cols: int) -> np.ndarray:
    return autos.twist_tables(ring, rows, cols)


def twist_table(skew: SkewRing, rows: int, cols: int) -> np.ndarray:
    return _twist_table(skew.ring, skew.autos, rows, cols)


@dataclass(frozen=True)
class QuotientContext:
    """Data (l, s, λ1, λ2) over R[x,y;ρ,θ].

    The constructor enforces the standing assumptions: λ1, λ2 are units fixed
    by ρ and θ, |⟨ρ⟩| divides l and |⟨θ⟩| divides s.  :meth:`unchecked`
    skips them, for demonstrating what breaks without them.
    """

    skew: SkewRing
    l: int
    s: int
    lambda1: Element
    lambda2: Element
    checked: bool = True

    def __post_init__(self):
        if self.l < 1 or self.s < 1:
            raise UsageError("periods l and s must be >= 1")
        ring = self.skew.ring
        ring._check(self.lambda1)
        ring._check(self.lambda2)
        if not self.checked:
            return
        autos = self.skew.autos
        for name, lam in (("lambda1", self.lambda1), ("lambda2", self.lambda2)):
            if not lam.is_unit():
                raise UsageError(f"{name} = {lam} is not a unit")
            if not autos.is_fixed(lam, "rho", "theta"):
                raise UsageError(f"{name} = {lam} is not fixed by rho and theta")
        if self.l % autos.rho_order(ring):
            raise UsageError(f"|<rho>| = {autos.rho_order(ring)} does not divide l = {self.l}")
        if self.s % autos.theta_order(ring):
            raise UsageError(f"|<theta>| = {autos.theta_order(ring)} does not divide s = {self.s}")

    @classmethod
    def create(cls, ring: RingSpec, rho_power: int, theta_power: int, l: int, s: int, lambda1, lambda2) -> "QuotientContext":
        skew = SkewRing(ring, AutomorphismPair(rho_power, theta_power))
        return cls(skew, l, s, ring(lambda1), ring(lambda2))

    @classmethod
    def unchecked(cls, ring: RingSpec, rho_power: int, theta_power: int, l: int, s: int, lambda1, lambda2) -> "QuotientContext":
        skew = SkewRing(ring, AutomorphismPair(rho_power, theta_power))
        return cls(skew, l, s, ring(lambda1), ring(lambda2), checked=False)

    @classmethod
    def from_json(cls, data: dict) -> "QuotientContext":
        try:
            ring = RingSpec.from_json(data["ring"])
            return cls.create(
                ring,
                int(data.get("rho_power", 0)),
                int(data.get("theta_power", 0)),
                int(data["l"]),
                int(data["s"]),
                ring(str(data.get("lambda1", "1"))),
                ring(str(data.get("lambda2", "1"))),
            )
        except KeyError as exc:
            raise UsageError(f"context JSON is missing {exc.args[0]!r}") from None

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "rho_power": self.skew.autos.rho_power,
            "theta_power": self.skew.autos.theta_power,
            "l": self.l,
            "s": self.s,
            "lambda1": str(self.lambda1),
            "lambda2": str(self.lambda2),
        }

    @property
    def ring(self) -> RingSpec:
        return self.skew.ring

    @property
    def autos(self) -> AutomorphismPair:
        return self.skew.autos

    @property
    def shape(self) -> tuple[int, int]:
        return (self.l, self.s)

    @property
    def x_modulus(self) -> SkewPoly:
        return self.skew.monomial(1, self.l, 0) - self.skew.const(self.lambda1)

    @property
    def y_modulus(self) -> SkewPoly:
        return self.skew.monomial(1, 0, self.s) - self.skew.const(self.lambda2)

    @property
    def diamond_modulus(self) -> SkewPoly:
        """(x^l - λ1) ⋆ (y^s - λ2), the modulus of R◇."""
        return self.x_modulus * self.y_modulus

    def with_lambdas(self, lambda1: Element, lambda2: Element) -> "QuotientContext":
        return QuotientContext(self.skew, self.l, self.s, lambda1, lambda2, self.checked)

    def __str__(self):
        a = self.skew.autos
        return (
            f"{self.ring} rho=Frob^{a.rho_power} theta=Frob^{a.theta_power} "
            f"l={self.l} s={self.s} lambda1={self.lambda1} lambda2={self.lambda2}"
        )


class ResidueClass:
    """An element of R°, stored as its canonical l×s array of codes."""

    __slots__ = ("ctx", "codes")

    def __init__(self, ctx: QuotientContext, codes: np.ndarray):
        codes = np.array(codes, dtype=np.int64)
        if codes.shape != ctx.shape:
            raise UsageError(f"array shape {codes.shape} does not match {ctx.shape}")
        codes.setflags(write=False)
        self.ctx = ctx
        self.codes = codes

    def lift(self) -> SkewPoly:
        return self.ctx.skew.from_dense(self.codes)

    def to_array(self) -> list[list[Element]]:
        ring = self.ctx.ring
        return [[Element(ring, int(c)) for c in row] for row in self.codes]

    def is_zero(self) -> bool:
        return not self.codes.any()

    def _same(self, other: "ResidueClass") -> None:
        if self.ctx != other.ctx:
            raise UsageError("residue classes from different quotient contexts")

    def __add__(self, other: "ResidueClass") -> "ResidueClass":
        self._same(other)
        return ResidueClass(self.ctx, self.ctx.ring.add_table[self.codes, other.codes])

    def __neg__(self) -> "ResidueClass":
        return ResidueClass(self.ctx, self.ctx.ring.neg_table[self.codes])

    def __sub__(self, other: "ResidueClass") -> "ResidueClass":
        return self + (-other)

    def __mul__(self, other: "ResidueClass") -> "ResidueClass":
        return star_mul_mod(self, other)

    def __eq__(self, other):
        if not isinstance(other, ResidueClass):
            return NotImplemented
        return self.ctx == other.ctx and np.array_equal(self.codes, other.codes)

    def __hash__(self):
        return hash((self.ctx, self.codes.tobytes()))

    def __str__(self):
        return self.lift().to_text()

    def __repr__(self):
        return f"ResidueClass({self})"


def reduce(ctx: QuotientContext, f: SkewPoly) -> ResidueClass:
    """Canonical representative: c x^i y^j -> c λ1^(i div l) λ2^(j div s) x^(i mod l) y^(j mod s)."""
    if f.ctx != ctx.skew:
        raise UsageError("polynomial and quotient context disagree on the ring")
    if not f.is_ordinary():
        raise UsageError("cannot reduce a polynomial with negative exponents")
    ring = ctx.ring
    l, s = ctx.shape
    lam1, lam2 = ctx.lambda1.code, ctx.lambda2.code
    out = np.zeros((l, s), dtype=np.int64)
    for (i, j), c in f.codes.items():
        c = ring.mul_codes(c, ring.pow_code(lam1, i // l))
        c = ring.mul_codes(c, ring.pow_code(lam2, j // s))
        out[i % l, j % s] = ring.add_codes(int(out[i % l, j % s]), c)
    return ResidueClass(ctx, out)


def reduce_stepwise(ctx: QuotientContext, f: SkewPoly, order: str = "x-first") -> ResidueClass:
    """Reduce by single replacements x^l -> λ1 and y^s -> λ2, one term at a
    time, preferring the x rule (``"x-first"``) or the y rule (``"y-first"``)."""
    if order not in ("x-first", "y-first"):
        raise UsageError("order must be 'x-first' or 'y-first'")
    if not f.is_ordinary():
        raise UsageError("cannot reduce a polynomial with negative exponents")
    ring = ctx.ring
    l, s = ctx.shape
    terms = f.codes
    while True:
        pending = [e for e in terms if e[0] >= l or e[1] >= s]
        if not pending:
            break
        e = min(pending)
        c = terms.pop(e)
        use_x = e[0] >= l and (order == "x-first" or e[1] < s)
        if use_x:
            target, c = (e[0] - l, e[1]), ring.mul_codes(c, ctx.lambda1.code)
        else:
            target, c = (e[0], e[1] - s), ring.mul_codes(c, ctx.lambda2.code)
        val = ring.add_codes(terms.get(target, 0), c)
        if val:
            terms[target] = val
        else:
            terms.pop(target, None)
    return ResidueClass(ctx, _dense(terms, ctx.shape))


def _dense(terms: dict, shape: tuple[int, int]) -> np.ndarray:
    out = np.zeros(shape, dtype=np.int64)
    for (i, j), c in terms.items():
        out[i, j] = c
    return out


def from_array(ctx: QuotientContext, arr: Sequence[Sequence]) -> ResidueClass:
    """Build from an l×s nested sequence of Elements, element strings or ints."""
    ring = ctx.ring
    rows = [list(r) for r in arr]
    if len(rows) != ctx.l or any(len(r) != ctx.s for r in rows):
        raise UsageError(f"expected a {ctx.l}x{ctx.s} array")
    return ResidueClass(ctx, np.array([[ring(v).code for v in r] for r in rows], dtype=np.int64))


def from_codes(ctx: QuotientContext, codes: np.ndarray) -> ResidueClass:
    return ResidueClass(ctx, codes)


def to_array(a: ResidueClass) -> list[list[Element]]:
    return a.to_array()


def star_mul_mod(a: ResidueClass, b: ResidueClass) -> ResidueClass:
    """reduce(lift(a) ⋆ lift(b))."""
    a._same(b)
    return reduce(a.ctx, a.lift() * b.lift())


def four_sum_product(a: ResidueClass, b: ResidueClass) -> ResidueClass:
    """Product in R° from the closed coefficient formula: c_{k,t} collects
    a_{i,j} ρ^iθ^j(μ b_{u,v}) over i+u ∈ {k, k+l}, j+v ∈ {t, t+s}, where the
    factor μ is λ1 for the wrapped x-sum and λ2 for the wrapped y-sum."""
    a._same(b)
    ctx = a.ctx
    ring, skew = ctx.ring, ctx.skew
    l, s = ctx.shape
    lam1, lam2 = ctx.lambda1.code, ctx.lambda2.code
    out = np.zeros((l, s), dtype=np.int64)
    for k in range(l):
        for t in range(s):
            acc = 0
            for xs, mu1 in ((k, 1), (k + l, lam1)):
                for ys, mu2 in ((t, 1), (t + s, lam2)):
                    mu = ring.mul_codes(mu1, mu2)
                    for i in range(l):
                        u = xs - i
                        if not 0 <= u < l:
                            continue
                        for j in range(s):
                            v = ys - j
                            if not 0 <= v < s:
                                continue
                            inner = ring.mul_codes(mu, int(b.codes[u, v]))
                            term = ring.mul_codes(int(a.codes[i, j]), skew.twist(inner, i, j))
                            acc = ring.add_codes(acc, term)
            out[k, t] = acc
    return ResidueClass(ctx, out)


def mul_codes_batch(ctx: QuotientContext, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Batched R° products of code arrays of shape (n, l, s) (broadcast on n)."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    ring = ctx.ring
    tw = twist_table(ctx.skew, A.shape[1], A.shape[2])
    return kernels.fold_mul_batch(
        A, B, ctx.l, ctx.s, ctx.lambda1.code, ctx.lambda2.code, ring.add_table, ring.mul_table, tw
    )


def reduce_diamond(ctx: QuotientContext, f: SkewPoly) -> SkewPoly:
    """Remainder of f on right division by (x^l - λ1) ⋆ (y^s - λ2)."""
    return right_divide(f, ctx.diamond_modulus)[1]
