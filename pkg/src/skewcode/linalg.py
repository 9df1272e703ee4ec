"""Exact linear algebra over a finite field, on arrays of element codes."""

from __future__ import annotations

import numpy as np

from . import kernels
from .errors import UsageError
from .ring import RingSpec


def _tables(ring: RingSpec):
    if not ring.is_field:
        raise UsageError(f"linear algebra needs a field, got {ring}")
    return ring.add_table, ring.mul_table, ring.neg_table, ring.inv_table


def rref(ring: RingSpec, M: np.ndarray) -> tuple[np.ndarray, np.ndarray, int]:
    """Deterministic RREF: pivot = first nonzero column, pivot scaled to 1."""
    add, mul, neg, inv = _tables(ring)
    M = np.asarray(M, dtype=np.int64)
    if M.ndim != 2:
        raise UsageError("rref expects a 2-D array")
    if M.shape[0] == 0:
        return M.copy(), np.zeros(0, dtype=np.int64), 0
    return kernels.rref(M, add, mul, neg, inv)


def rank(ring: RingSpec, M: np.ndarray) -> int:
    return rref(ring, M)[2]


def row_basis(ring: RingSpec, M: np.ndarray) -> np.ndarray:
    R, _, r = rref(ring, M)
    return R[:r]


def nullspace(ring: RingSpec, M: np.ndarray, n_cols: int | None = None) -> np.ndarray:
    """Rows spanning {v : M v = 0} under the standard bilinear form."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[1] if M.ndim == 2 and M.size else (n_cols if n_cols is not None else M.shape[-1])
    if M.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots, r = rref(ring, M)
    neg = ring.neg_table
    free = [c for c in range(n) if c not in set(pivots.tolist())]
    out = np.zeros((len(free), n), dtype=np.int64)
    for row, f in enumerate(free):
        out[row, f] = 1
        for k in range(r):
            out[row, pivots[k]] = neg[R[k, f]]
    return out


def in_span(ring: RingSpec, M: np.ndarray, V: np.ndarray) -> np.ndarray:
    """Boolean per row of V: does it lie in the row space of M?"""
    add, mul, neg, _ = _tables(ring)
    V = np.atleast_2d(np.asarray(V, dtype=np.int64))
    M = np.asarray(M, dtype=np.int64)
    if M.shape[0] == 0:
        return ~V.any(axis=1)
    R, pivots, r = rref(ring, M)
    return kernels.in_span_batch(R, pivots, r, V, add, mul, neg)


def same_span(ring: RingSpec, A: np.ndarray, B: np.ndarray) -> bool:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    ra = rank(ring, A) if A.shape[0] else 0
    rb = rank(ring, B) if B.shape[0] else 0
    if ra != rb:
        return False
    return bool(in_span(ring, A, B).all()) if B.shape[0] else True


def enumerate_span(ring: RingSpec, M: np.ndarray, cap: int) -> np.ndarray:
    """Every vector of the row space of M, each exactly once."""
    basis = row_basis(ring, M) if np.asarray(M).shape[0] else np.zeros((0, np.asarray(M).shape[1]), dtype=np.int64)
    size = ring.size ** basis.shape[0]
    if size > cap:
        from .errors import CapExceededError

        raise CapExceededError(f"span has {size} vectors, above the cap {cap}")
    return kernels.span_enumerate(basis, ring.size, ring.add_table, ring.mul_table)
