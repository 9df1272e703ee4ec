"""2-D skew (λ1,λ2)-constacyclic codes over finite fields.

Codewords are l×s arrays of element codes; entry (i, j) is the coefficient of
x^i y^j.  Polynomial views come from :class:`~skewcode.quotient.ResidueClass`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np

from . import kernels, linalg
from .errors import CapExceededError, NotAGeneratorError, UsageError
from .poly import SkewPoly, lex_key, right_divide
from .quotient import QuotientContext, ResidueClass, mul_codes_batch, reduce, twist_table
from .ring import ENUMERATION_CAP, Element


def as_codes(ctx: QuotientContext, c) -> np.ndarray:
    """Codes of a codeword given as a ResidueClass, code array or nested list."""
    if isinstance(c, ResidueClass):
        return np.asarray(c.codes)
    if isinstance(c, SkewPoly):
        return reduce(ctx, c).codes
    arr = np.asarray(c)
    if arr.dtype == object or arr.dtype.kind in "US":
        arr = np.array([[ctx.ring(v).code for v in row] for row in c], dtype=np.int64)
    arr = arr.astype(np.int64)
    if arr.shape != ctx.shape:
        raise UsageError(f"codeword shape {arr.shape} does not match {ctx.shape}")
    return arr


def _as_batch(ctx: QuotientContext, words) -> np.ndarray:
    if isinstance(words, np.ndarray) and words.ndim == 3:
        if words.shape[1:] != ctx.shape:
            raise UsageError(f"codeword shape {words.shape[1:]} does not match {ctx.shape}")
        return words.astype(np.int64, copy=False)
    words = list(words)
    if not words:
        return np.zeros((0,) + ctx.shape, dtype=np.int64)
    return np.stack([as_codes(ctx, w) for w in words])


def _lambda(ctx: QuotientContext, lam, default: Element) -> int:
    return default.code if lam is None else ctx.ring(lam).code


def column_shift_batch(ctx: QuotientContext, C: np.ndarray, lam=None) -> np.ndarray:
    """Column skew λ1-shift of each array in C (shape (n, l, s))."""
    ring = ctx.ring
    out = np.roll(twist_table(ctx.skew, 2, 1)[1, 0][C], 1, axis=1)
    out[:, 0, :] = ring.mul_table[_lambda(ctx, lam, ctx.lambda1), out[:, 0, :]]
    return out


def row_shift_batch(ctx: QuotientContext, C: np.ndarray, lam=None) -> np.ndarray:
    """Row skew λ2-shift of each array in C (shape (n, l, s))."""
    ring = ctx.ring
    out = np.roll(twist_table(ctx.skew, 1, 2)[0, 1][C], 1, axis=2)
    out[:, :, 0] = ring.mul_table[_lambda(ctx, lam, ctx.lambda2), out[:, :, 0]]
    return out


def _shift_one(fn, ctx, c, lam):
    out = fn(ctx, as_codes(ctx, c)[None], lam)[0]
    return ResidueClass(ctx, out) if isinstance(c, ResidueClass) else out


def column_shift(ctx: QuotientContext, c, lam=None):
    """Row i of the result is ρ(row i-1); row 0 is λ1·ρ(row l-1).

    ``lam`` overrides λ1 (the dual code uses λ1⁻¹).  Returns a ResidueClass
    for a ResidueClass input, otherwise a code array.
    """
    return _shift_one(column_shift_batch, ctx, c, lam)


def row_shift(ctx: QuotientContext, c, lam=None):
    """Column j of the result is θ(column j-1); column 0 is λ2·θ(column s-1)."""
    return _shift_one(row_shift_batch, ctx, c, lam)


def _require_field(ctx: QuotientContext) -> None:
    if not ctx.ring.is_field:
        raise UsageError(f"codes need a field coefficient ring, got {ctx.ring}")


@dataclass(frozen=True, eq=False)
class Code:
    """The left ideal ⟨g⟩ of R° generated by a monic right divisor g.

    ``basis`` holds the k·t words x^i y^j ⋆ g (i < k, j < t, j outer).
    ``gen_matrix`` starts with those rows and is extended greedily by further
    reduced left multiples x^i y^j ⋆ g until it spans the whole ideal; the
    two agree exactly when the k·t words already span.
    """

    ctx: QuotientContext
    g: SkewPoly
    h: SkewPoly
    k: int
    t: int
    basis: tuple[ResidueClass, ...]
    gen_matrix: np.ndarray = field(repr=False)

    @property
    def kt(self) -> int:
        return self.k * self.t

    @cached_property
    def basis_rank(self) -> int:
        if not self.basis:
            return 0
        return linalg.rank(self.ctx.ring, np.stack([b.codes.reshape(-1) for b in self.basis]))

    @property
    def basis_spans_code(self) -> bool:
        """Whether the k·t basis words are independent and span ⟨g⟩."""
        return self.basis_rank == self.kt == self.dimension

    @property
    def dimension(self) -> int:
        return self.gen_matrix.shape[0]

    @property
    def cardinality(self) -> int:
        return self.ctx.ring.size ** self.dimension

    @property
    def length(self) -> int:
        return self.ctx.l * self.ctx.s

    @cached_property
    def _rref(self):
        if self.dimension == 0:
            return None
        return linalg.rref(self.ctx.ring, self.gen_matrix)

    def contains(self, c) -> bool:
        return bool(self.contains_batch(as_codes(self.ctx, c)[None])[0])

    def contains_batch(self, words) -> np.ndarray:
        W = _as_batch(self.ctx, words).reshape(-1, self.length)
        if self._rref is None:
            return ~W.any(axis=1)
        R, pivots, r = self._rref
        ring = self.ctx.ring
        return kernels.in_span_batch(R, pivots, r, W, ring.add_table, ring.mul_table, ring.neg_table)

    def codewords(self, cap: int = ENUMERATION_CAP) -> np.ndarray:
        """All codewords, flattened row-major, shape (q^kt, l·s)."""
        if self.dimension == 0:
            return np.zeros((1, self.length), dtype=np.int64)
        return linalg.enumerate_span(self.ctx.ring, self.gen_matrix, cap)

    def to_json(self, with_distance: bool = False, cap: int = ENUMERATION_CAP) -> dict:
        ring = self.ctx.ring
        fmt = ring.format_code
        out = {
            "context": self.ctx.to_json(),
            "g": self.g.to_text(),
            "h": self.h.to_text(),
            "k": self.k,
            "t": self.t,
            "dimension": self.dimension,
            "cardinality": self.cardinality,
            "basis_spans_code": self.basis_spans_code,
            "basis": [b.lift().to_text() for b in self.basis],
            "gen_matrix": [[fmt(int(v)) for v in row] for row in self.gen_matrix],
        }
        if with_distance:
            try:
                out["min_distance"] = min_distance(self, cap)
            except (CapExceededError, UsageError) as exc:
                out["min_distance"] = None
                out["min_distance_note"] = str(exc)
        return out


def build_code(ctx: QuotientContext, g: SkewPoly) -> Code:
    """Code generated by g in R°, with cofactor, basis and generator matrix."""
    _require_field(ctx)
    if g.ctx != ctx.skew:
        raise UsageError("generator and quotient context disagree on the ring")
    if not g.is_ordinary():
        raise UsageError("generator has negative exponents")
    if g.is_zero() or not g.is_monic():
        raise UsageError("generator must be monic")
    a, b = g.quasi_degree()
    if a > ctx.l or b > ctx.s:
        raise UsageError(f"deg g = {(a, b)} exceeds ({ctx.l}, {ctx.s})")
    h, rem = right_divide(ctx.diamond_modulus, g)
    if not rem.is_zero():
        raise NotAGeneratorError(f"{g} does not right-divide {ctx.diamond_modulus}", rem)
    k, t = ctx.l - a, ctx.s - b
    words = left_span_matrix(ctx, g).reshape((ctx.s, ctx.l, -1))  # [j, i] -> word
    basis = tuple(ResidueClass(ctx, words[j, i].reshape(ctx.shape)) for j in range(t) for i in range(k))
    order = [(i, j) for j in range(t) for i in range(k)]
    order += [(i, j) for j in range(ctx.s) for i in range(ctx.l) if not (i < k and j < t)]
    gen = _greedy_rows(ctx.ring, [words[j, i] for i, j in order], ctx.l * ctx.s)
    gen.setflags(write=False)
    return Code(ctx, g, h, k, t, basis, gen)


def _greedy_rows(ring, rows: list[np.ndarray], n: int) -> np.ndarray:
    """The rows that raise the rank, in the given order."""
    kept: list[np.ndarray] = []
    for row in rows:
        if not row.any():
            continue
        if kept and linalg.in_span(ring, np.stack(kept), row[None])[0]:
            continue
        kept.append(row)
    return np.stack(kept) if kept else np.zeros((0, n), dtype=np.int64)


def contains(code: Code, c) -> bool:
    return code.contains(c)


def _box_codes(ctx: QuotientContext, fs) -> np.ndarray:
    """Dense (n, L, S) code arrays of ordinary polynomials, sharing one box."""
    fs = list(fs)
    L = max([f.box()[0] for f in fs] + [1])
    S = max([f.box()[1] for f in fs] + [1])
    return np.stack([f.to_dense((L, S)) for f in fs]) if fs else np.zeros((0, L, S), dtype=np.int64)


def membership_via_h(code: Code, f: SkewPoly) -> bool:
    """Whether f ⋆ h vanishes in R◇ (remainder modulo (x^l-λ1)⋆(y^s-λ2)).

    This agrees with ``f in code`` when ``code.basis_spans_code``. Otherwise
    codewords outside the span of the x^i y^j ⋆ g are not annihilated.
    """
    if not f.is_ordinary():
        raise UsageError("membership needs an ordinary polynomial")
    return bool(membership_via_h_batch(code, f.to_dense(f.box())[None])[0])


def membership_via_h_batch(code: Code, F: np.ndarray) -> np.ndarray:
    """Vectorised membership_via_h over dense coefficient boxes F (n, L, S)."""
    ctx = code.ctx
    ring = ctx.ring
    F = np.asarray(F, dtype=np.int64)
    H = code.h.to_dense(code.h.box())
    L = max(F.shape[1] + H.shape[0] - 1, ctx.l + 1)
    S = max(F.shape[2] + H.shape[1] - 1, ctx.s + 1)
    tw = twist_table(ctx.skew, max(L, F.shape[1]), max(S, F.shape[2]))
    prod = kernels.fold_mul_batch(F, H[None], L, S, 1, 1, ring.add_table, ring.mul_table, tw)
    M = ctx.diamond_modulus.to_dense((ctx.l + 1, ctx.s + 1))[None]
    rem = kernels.right_remainder_batch(prod, M, ring.add_table, ring.mul_table, ring.neg_table, tw)
    return ~rem.reshape(rem.shape[0], -1).any(axis=1)


def is_2d_skew_constacyclic(ctx: QuotientContext, spanning_set, lambdas: tuple | None = None) -> bool:
    """Whether the span is closed under both skew shifts.

    The shifts are semilinear, so closure of a basis implies closure of the
    span.  ``lambdas`` overrides (λ1, λ2).
    """
    _require_field(ctx)
    W = _as_batch(ctx, spanning_set)
    if W.shape[0] == 0 or not W.any():
        return True
    lam1, lam2 = lambdas if lambdas is not None else (None, None)
    B = linalg.row_basis(ctx.ring, W.reshape(W.shape[0], -1)).reshape((-1,) + ctx.shape)
    images = np.concatenate([column_shift_batch(ctx, B, lam1), row_shift_batch(ctx, B, lam2)])
    return bool(linalg.in_span(ctx.ring, B.reshape(B.shape[0], -1), images.reshape(images.shape[0], -1)).all())


def left_span_matrix(ctx: QuotientContext, g) -> np.ndarray:
    """Rows x^i y^j ⋆ g reduced in R°, for all 0 ≤ i < l, 0 ≤ j < s."""
    gc = as_codes(ctx, g)
    monos = np.zeros((ctx.l * ctx.s,) + ctx.shape, dtype=np.int64)
    for n, (j, i) in enumerate((j, i) for j in range(ctx.s) for i in range(ctx.l)):
        monos[n, i, j] = 1
    return mul_codes_batch(ctx, monos, gc[None]).reshape(ctx.l * ctx.s, -1)


def leading_positions(ctx: QuotientContext, W: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Quasi-degree (i, j) and leading code of each nonzero array in W (n, l, s)."""
    l, s = ctx.shape
    # flatten so that position 0 is the ⇒-greatest exponent (l-1, s-1)
    order = W[:, ::-1, ::-1].transpose(0, 2, 1).reshape(W.shape[0], -1)
    first = np.argmax(order != 0, axis=1)
    j = s - 1 - first // l
    i = l - 1 - first % l
    return i, j, order[np.arange(W.shape[0]), first]


@dataclass(frozen=True)
class GeneratorSearch:
    generator: SkewPoly | None
    minimal_degrees: tuple[tuple[int, int], ...]
    candidates: int
    generating_candidates: int
    note: str = ""

    @property
    def ties(self) -> bool:
        return self.generating_candidates > 1


def minimal_degree_generator(ctx: QuotientContext, spanning_set, cap: int = ENUMERATION_CAP) -> GeneratorSearch:
    """A ≤-minimal monic codeword whose left multiples span the code.

    Minimal monic codewords need not be unique or comparable; every one is
    tried in a fixed order and the count of generating ones is reported.
    """
    _require_field(ctx)
    W = _as_batch(ctx, spanning_set).reshape(-1, ctx.l * ctx.s)
    if not W.any():
        return GeneratorSearch(None, (), 0, 0, "zero code has no monic element")
    words = linalg.enumerate_span(ctx.ring, W, cap).reshape((-1,) + ctx.shape)
    words = words[words.reshape(words.shape[0], -1).any(axis=1)]
    i, j, lc = leading_positions(ctx, words)
    monic = lc == 1
    words, i, j = words[monic], i[monic], j[monic]
    degs = sorted(set(zip(i.tolist(), j.tolist())), key=lex_key)
    minimal = tuple(d for d in degs if not any(e != d and e[0] <= d[0] and e[1] <= d[1] for e in degs))
    picks = [n for n in range(words.shape[0]) if (int(i[n]), int(j[n])) in minimal]
    picks.sort(key=lambda n: (lex_key((int(i[n]), int(j[n]))), words[n].tobytes()))
    chosen = None
    hits = 0
    for n in picks:
        if linalg.same_span(ctx.ring, left_span_matrix(ctx, words[n]), W):
            hits += 1
            if chosen is None:
                chosen = ctx.skew.from_dense(words[n])
    note = "" if chosen is not None else "no minimal monic codeword generates the span"
    return GeneratorSearch(chosen, minimal, len(picks), hits, note)


def staircase_shape(g: SkewPoly) -> bool:
    """g has degree (a, b), support in [0,a]×[0,b], and coefficient 1 at
    every (a, j) and (i, b)."""
    if g.is_zero() or not g.is_ordinary():
        return False
    a, b = g.quasi_degree()
    codes = g.codes
    if any(i > a or j > b for i, j in codes):
        return False
    return all(codes.get((a, j)) == 1 for j in range(b + 1)) and all(codes.get((i, b)) == 1 for i in range(a))


@dataclass(frozen=True)
class GxyReport:
    applicable: bool
    lhs: bool | None = None
    rhs: bool | None = None
    reason: str = ""

    @property
    def agrees(self) -> bool:
        return not self.applicable or self.lhs == self.rhs


def check_gxy_criterion(code: Code) -> GxyReport:
    """lhs: g ⋆ xy lies in the code; rhs: every coefficient of g is fixed by ρθ.

    Applies to staircase-shaped generators with unit λ1, λ2; otherwise the
    report is marked not applicable.
    """
    ctx = code.ctx
    if not (ctx.lambda1.is_unit() and ctx.lambda2.is_unit()):
        return GxyReport(False, reason="lambda1 and lambda2 must be units")
    if not staircase_shape(code.g):
        return GxyReport(False, reason="generator is not of staircase shape")
    skew = ctx.skew
    lhs = code.contains(reduce(ctx, code.g * skew.monomial(1, 1, 1)))
    rhs = all(skew.twist(c, 1, 1) == c for c in code.g.codes.values())
    return GxyReport(True, lhs, rhs)


def min_distance(code: Code, cap: int = ENUMERATION_CAP) -> int:
    """Minimum Hamming weight over nonzero codewords, by enumeration."""
    if code.dimension == 0:
        raise UsageError("the zero code has no minimum distance")
    if code.cardinality > cap:
        raise CapExceededError(
            f"code has {code.cardinality} words, above the cap {cap}; "
            "min_distance_bound gives an upper bound"
        )
    words = code.codewords(cap)
    weights = (words != 0).sum(axis=1)
    return int(weights[weights > 0].min())


def min_distance_bound(code: Code) -> int:
    """Upper bound on the minimum distance: least weight of a reduced basis row."""
    if code.dimension == 0:
        raise UsageError("the zero code has no minimum distance")
    R = linalg.row_basis(code.ctx.ring, code.gen_matrix)
    return int((R != 0).sum(axis=1).min())


def codewords_to_text(ctx: QuotientContext, rows: Iterable[np.ndarray]) -> list[list[list[str]]]:
    fmt = ctx.ring.format_code
    return [[[fmt(int(v)) for v in row] for row in np.asarray(w).reshape(ctx.shape)] for w in rows]
