"""Search for monic right divisors of (x^l - λ1) ⋆ (y^s - λ2) over a field.

Over a field a right divisor g of quasi-degree (a, b) has support in the
rectangle [0,a]×[0,b].  Its four boundary lines are scalar multiples of monic
right divisors of x^l - λ1 (rows) or y^s - λ2 (columns): setting y = 0, or
taking the top y-coefficient, is a ring map onto F[x;ρ] up to an automorphism
fixing x^l - λ1.  The pruned search fixes the boundary from those univariate
divisors and enumerates only the interior, then filters with a batched
remainder kernel.  :func:`naive_right_divisors` skips the pruning and is kept
as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from . import kernels
from .errors import CapExceededError, UsageError
from .poly import SkewPoly, lex_key
from .quotient import QuotientContext, twist_table

DEFAULT_BUDGET = 10**7
CHUNK = 1 << 15


@dataclass(frozen=True)
class DivisorSearch:
    divisors: tuple[SkewPoly, ...]
    evaluated: int
    skipped_degrees: tuple[tuple[int, int], ...] = ()

    @property
    def complete(self) -> bool:
        return not self.skipped_degrees


def _digits(start: int, stop: int, q: int, width: int) -> np.ndarray:
    n = np.arange(start, stop, dtype=np.int64)
    return (n[:, None] // (q ** np.arange(width, dtype=np.int64))[None, :]) % q


def _filter(ctx: QuotientContext, cands: np.ndarray, M: np.ndarray) -> np.ndarray:
    """Candidates (n, a+1, b+1) with leading 1 at the corner that right-divide M."""
    ring = ctx.ring
    tw = twist_table(ctx.skew, M.shape[1], M.shape[2])
    keep = []
    for start in range(0, cands.shape[0], CHUNK):
        G = cands[start : start + CHUNK]
        R = kernels.right_remainder_batch(M, G, ring.add_table, ring.mul_table, ring.neg_table, tw)
        keep.append(G[~R.reshape(R.shape[0], -1).any(axis=1)])
    return np.concatenate(keep) if keep else cands[:0]


def univariate_right_divisors(ctx: QuotientContext, var: str) -> dict[int, list[np.ndarray]]:
    """Monic right divisors of x^l - λ1 (``var="x"``) or y^s - λ2 (``"y"``),
    as coefficient vectors (low to high) grouped by degree."""
    ring = ctx.ring
    q = ring.size
    if var == "x":
        n, lam = ctx.l, ctx.lambda1.code
        shape = lambda v: v[:, :, None]  # noqa: E731
    elif var == "y":
        n, lam = ctx.s, ctx.lambda2.code
        shape = lambda v: v[:, None, :]  # noqa: E731
    else:
        raise UsageError("var must be 'x' or 'y'")
    target = np.zeros(n + 1, dtype=np.int64)
    target[n] = 1
    target[0] = ring.neg_code(lam)
    out: dict[int, list[np.ndarray]] = {}
    for d in range(n + 1):
        if q**d > DEFAULT_BUDGET:
            raise CapExceededError(f"univariate search of degree {d} exceeds the budget")
        cands = np.concatenate([_digits(0, q**d, q, d), np.ones((q**d, 1), dtype=np.int64)], axis=1)
        hits = _filter(ctx, shape(cands), shape(target[None]))
        out[d] = [h.reshape(-1) for h in hits]
    return out


def right_divisors(ctx: QuotientContext, budget: int = DEFAULT_BUDGET) -> DivisorSearch:
    """All monic right divisors, sorted by quasi-degree (⇒) then coefficients.

    Degrees whose interior enumeration would exceed ``budget`` candidates are
    skipped and listed in the result.
    """
    if not ctx.ring.is_field:
        raise UsageError("divisor search needs a field")
    ring = ctx.ring
    q = ring.size
    l, s = ctx.shape
    M = ctx.diamond_modulus.to_dense((l + 1, s + 1))[None]
    dx = univariate_right_divisors(ctx, "x")
    dy = univariate_right_divisors(ctx, "y")
    found: list[np.ndarray] = []
    skipped: list[tuple[int, int]] = []
    evaluated = 0
    for b in range(s + 1):
        for a in range(l + 1):
            tops, rights = dx[a], dy[b]
            if a == 0 or b == 0:
                # a single line: the monic univariate divisor itself
                line = rights if a == 0 else tops
                cands = np.stack([v.reshape(a + 1, b + 1) for v in line]) if line else None
                if cands is not None:
                    evaluated += cands.shape[0]
                    found.extend(_filter(ctx, cands, M))
                continue
            inner = (a - 1) * (b - 1)
            combos = []
            for top, right, bottom, left in product(tops, rights, tops, dy[b]):
                # bottom row = right[0]·bottom, left column = top[0]·left
                c00 = ring.mul_codes(int(right[0]), int(bottom[0]))
                if c00 != ring.mul_codes(int(top[0]), int(left[0])):
                    continue
                G = np.zeros((a + 1, b + 1), dtype=np.int64)
                G[:, b] = top
                G[a, :] = right
                G[:, 0] = ring.mul_table[int(right[0]), bottom]
                G[0, :] = ring.mul_table[int(top[0]), left]
                combos.append(G)
            total = len(combos) * q**inner
            if total > budget:
                skipped.append((a, b))
                continue
            evaluated += total
            for G in combos:
                for start in range(0, q**inner, CHUNK):
                    stop = min(q**inner, start + CHUNK)
                    cands = np.repeat(G[None], stop - start, axis=0)
                    if inner:
                        cands[:, 1:a, 1:b] = _digits(start, stop, q, inner).reshape(-1, a - 1, b - 1)
                    found.extend(_filter(ctx, cands, M))
    return DivisorSearch(_finish(ctx, found), evaluated, tuple(skipped))


def naive_right_divisors(ctx: QuotientContext, budget: int = DEFAULT_BUDGET) -> DivisorSearch:
    """Every monic polynomial with support in its degree box, filtered by
    exact division.  Exponential; for cross-checking tiny cases."""
    if not ctx.ring.is_field:
        raise UsageError("divisor search needs a field")
    q = ctx.ring.size
    l, s = ctx.shape
    total = sum(q ** ((a + 1) * (b + 1) - 1) for a in range(l + 1) for b in range(s + 1))
    if total > budget:
        raise CapExceededError(f"naive search needs {total} candidates, above the budget {budget}")
    M = ctx.diamond_modulus.to_dense((l + 1, s + 1))[None]
    found: list[np.ndarray] = []
    for b in range(s + 1):
        for a in range(l + 1):
            width = (a + 1) * (b + 1) - 1
            for start in range(0, q**width, CHUNK):
                stop = min(q**width, start + CHUNK)
                flat = np.concatenate([_digits(start, stop, q, width), np.ones((stop - start, 1), dtype=np.int64)], axis=1)
                # corner (a, b) is last in column-major order
                cands = flat.reshape(-1, b + 1, a + 1).transpose(0, 2, 1)
                found.extend(_filter(ctx, np.ascontiguousarray(cands), M))
    return DivisorSearch(_finish(ctx, found), total)


def _finish(ctx: QuotientContext, arrays: list[np.ndarray]) -> tuple[SkewPoly, ...]:
    polys = {}
    for G in arrays:
        f = ctx.skew.from_dense(G)
        polys[f] = (lex_key(f.quasi_degree()), sorted(f.codes.items()))
    return tuple(sorted(polys, key=polys.__getitem__))
