"""The ⊙ product, dual codes, the twisted reversal 𝒜(b) and the dual candidate."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels, linalg
from .code import Code, as_codes, column_shift_batch, is_2d_skew_constacyclic, left_span_matrix, row_shift_batch
from .errors import TheoremViolation, UsageError
from .poly import SkewPoly, psi, right_divides
from .quotient import QuotientContext, ResidueClass, mul_codes_batch, reduce
from .ring import Element


def dot(ctx: QuotientContext, c, d) -> Element:
    """c ⊙ d = Σ c_ij d_ij."""
    cc, dc = as_codes(ctx, c), as_codes(ctx, d)
    ring = ctx.ring
    return ring.element(int(kernels.dot_batch(cc.reshape(1, -1), dc.reshape(1, -1), ring.add_table, ring.mul_table)[0]))


def dual_code(code: Code) -> np.ndarray:
    """Generator matrix of C⊥: a nullspace basis of the generator matrix."""
    n = code.length
    if code.dimension == 0:
        return np.eye(n, dtype=np.int64)
    return linalg.nullspace(code.ctx.ring, code.gen_matrix)


def dual_of_matrix(ring, G: np.ndarray, n: int) -> np.ndarray:
    G = np.asarray(G, dtype=np.int64).reshape(-1, n)
    if G.shape[0] == 0 or not G.any():
        return np.eye(n, dtype=np.int64)
    return linalg.nullspace(ring, G)


def inverse_lambdas(ctx: QuotientContext) -> tuple[Element, Element]:
    return ctx.lambda1.inverse(), ctx.lambda2.inverse()


def dual_shift_closure(code: Code) -> bool:
    """Whether C⊥ is closed under the skew shifts with λ1⁻¹ and λ2⁻¹."""
    ctx = code.ctx
    D = dual_code(code).reshape((-1,) + ctx.shape)
    return is_2d_skew_constacyclic(ctx, D, inverse_lambdas(ctx))


def double_dual_equal(code: Code) -> bool:
    """(C⊥)⊥ = C as row spaces."""
    ring = code.ctx.ring
    n = code.length
    DD = dual_of_matrix(ring, dual_code(code), n)
    if code.dimension == 0:
        return not DD.any()
    return linalg.same_span(ring, DD, code.gen_matrix)


def a_matrix(ctx: QuotientContext, b) -> np.ndarray:
    """𝒜(b): entry (r, c) is ρ^r θ^c (b_{l-1-r, s-1-c})."""
    bc = as_codes(ctx, b)
    l, s = ctx.shape
    tw = ctx.autos.twist_tables(ctx.ring, l, s)
    rev = bc[::-1, ::-1]
    r, c = np.indices((l, s))
    return tw[r, c, rev]


def a_matrix_via_psi(ctx: QuotientContext, b) -> np.ndarray:
    """Coefficient array of x^(l-1) y^(s-1) ⋆ ψ(b), computed through ψ."""
    poly = b.lift() if isinstance(b, ResidueClass) else ctx.skew.from_dense(as_codes(ctx, b))
    prod = ctx.skew.monomial(1, ctx.l - 1, ctx.s - 1) * psi(poly)
    if not prod.is_ordinary():
        raise TheoremViolation("x^(l-1) y^(s-1) ⋆ ψ(b) has negative exponents")
    return prod.to_dense(ctx.shape)


def shift_orbit(ctx: QuotientContext, A: np.ndarray) -> np.ndarray:
    """Every array reachable from A by column and row shifts (closure)."""
    A = np.asarray(A, dtype=np.int64)
    seen = {A.tobytes(): A}
    frontier = [A]
    while frontier:
        batch = np.stack(frontier)
        nxt = np.concatenate([column_shift_batch(ctx, batch), row_shift_batch(ctx, batch)])
        frontier = []
        for w in nxt:
            key = w.tobytes()
            if key not in seen:
                seen[key] = w
                frontier.append(w)
    return np.stack(list(seen.values()))


def _lambda_squares_one(ctx: QuotientContext) -> bool:
    return (ctx.lambda1 * ctx.lambda1).code == 1 and (ctx.lambda2 * ctx.lambda2).code == 1


@dataclass(frozen=True)
class OrthogonalityReport:
    applicable: bool
    product_zero: bool | None = None
    orthogonal_to_all_shifts: bool | None = None
    reason: str = ""

    @property
    def agrees(self) -> bool:
        return not self.applicable or self.product_zero == self.orthogonal_to_all_shifts


def annihilator_orthogonality_check(ctx: QuotientContext, a, b) -> OrthogonalityReport:
    """Compare a ⋆ b = 0 in R° with a ⊥ every shift of 𝒜(b).  Needs λ1² = λ2² = 1."""
    if not _lambda_squares_one(ctx):
        return OrthogonalityReport(False, reason="requires lambda1^2 = lambda2^2 = 1")
    zero, orth = annihilator_orthogonality_batch(ctx, as_codes(ctx, a)[None], as_codes(ctx, b))
    return OrthogonalityReport(True, bool(zero[0]), bool(orth[0]))


def annihilator_orthogonality_batch(ctx: QuotientContext, A: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """For one b and many a (shape (n, l, s)): (a ⋆ b == 0, a ⊥ orbit of 𝒜(b))."""
    ring = ctx.ring
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    prod = mul_codes_batch(ctx, A, b[None])
    zero = ~prod.reshape(prod.shape[0], -1).any(axis=1)
    orbit = shift_orbit(ctx, a_matrix(ctx, b)).reshape(-1, ctx.l * ctx.s)
    flat = A.reshape(A.shape[0], -1)
    orth = np.ones(A.shape[0], dtype=bool)
    for w in orbit:
        orth &= kernels.dot_batch(flat, w[None], ring.add_table, ring.mul_table) == 0
    return zero, orth


@dataclass(frozen=True)
class DualCandidate:
    applicable: bool
    candidate: SkewPoly | None = None
    in_dual: bool | None = None
    divides: bool | None = None
    reason: str = ""


def dual_candidate(code: Code) -> DualCandidate:
    """x^k y^t ⋆ ψ(h), with membership in C⊥ and right-divisibility of the
    modulus (after scaling to monic)."""
    ctx = code.ctx
    if not _lambda_squares_one(ctx):
        return DualCandidate(False, reason="requires lambda1^2 = lambda2^2 = 1")
    if tuple(code.h.quasi_degree()) != (code.k, code.t):
        return DualCandidate(False, reason="deg h differs from (k, t)")
    cand = ctx.skew.monomial(1, code.k, code.t) * psi(code.h)
    if not cand.is_ordinary():
        raise TheoremViolation(f"x^k y^t ⋆ ψ(h) = {cand} has negative exponents")
    ring = ctx.ring
    word = reduce(ctx, cand).codes.reshape(1, -1)
    if code.dimension == 0:
        in_dual = True
    else:
        in_dual = bool((kernels.dot_batch(code.gen_matrix, word, ring.add_table, ring.mul_table) == 0).all())
    monic = cand.leading_coefficient().inverse() * cand
    divides = right_divides(monic, ctx.diamond_modulus)
    return DualCandidate(True, cand, in_dual, divides)


def open_problem_probe(code: Code) -> dict:
    """Does the left span of the candidate equal C⊥?  An observation only."""
    ctx = code.ctx
    dc = dual_candidate(code)
    D = dual_code(code)
    ring = ctx.ring
    dual_dim = linalg.rank(ring, D) if D.shape[0] else 0
    if not dc.applicable:
        return {"applicable": False, "reason": dc.reason, "dual_dim": dual_dim}
    span = left_span_matrix(ctx, reduce(ctx, dc.candidate))
    span_dim = linalg.rank(ring, span) if span.any() else 0
    if span_dim == 0:
        generates = dual_dim == 0
    else:
        generates = span_dim == dual_dim and bool(linalg.in_span(ring, D, span).all())
    return {"applicable": True, "generates": generates, "dual_dim": dual_dim, "candidate_span_dim": span_dim}


@dataclass(frozen=True)
class DualReport:
    dual_dim: int
    dual_is_constacyclic: bool
    lambdas: tuple[Element, Element]
    double_dual: bool
    candidate: DualCandidate
    candidate_generates_dual: bool | None
    candidate_span_dim: int | None

    def to_json(self) -> dict:
        c = self.candidate
        return {
            "dual_dim": self.dual_dim,
            "dual_is_constacyclic": self.dual_is_constacyclic,
            "lambda1_inv": str(self.lambdas[0]),
            "lambda2_inv": str(self.lambdas[1]),
            "double_dual_equal": self.double_dual,
            "candidate_applicable": c.applicable,
            "candidate": c.candidate.to_text() if c.candidate is not None else None,
            "candidate_in_dual": c.in_dual,
            "candidate_divides": c.divides,
            "candidate_generates_dual": self.candidate_generates_dual,
            "candidate_span_dim": self.candidate_span_dim,
            "note": c.reason,
        }


def dual_report(code: Code) -> DualReport:
    D = dual_code(code)
    probe = open_problem_probe(code)
    return DualReport(
        dual_dim=linalg.rank(code.ctx.ring, D) if D.any() else 0,
        dual_is_constacyclic=dual_shift_closure(code),
        lambdas=inverse_lambdas(code.ctx),
        double_dual=double_dual_equal(code),
        candidate=dual_candidate(code),
        candidate_generates_dual=probe.get("generates"),
        candidate_span_dim=probe.get("candidate_span_dim"),
    )
