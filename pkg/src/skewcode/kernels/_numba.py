"""Numba-compiled kernels; same signatures and results as ``_numpy``."""

import numpy as np
from numba import njit


@njit(cache=True)
def _fold_mul(A, B, l, s, lam1, lam2, add, mul, tw):
    na, la, sa = A.shape
    nb, lb, sb = B.shape
    n = max(na, nb)
    out = np.zeros((n, l, s), dtype=np.int64)
    for k in range(n):
        ka = k if na > 1 else 0
        kb = k if nb > 1 else 0
        for i in range(la):
            for j in range(sa):
                a = A[ka, i, j]
                if a == 0:
                    continue
                for u in range(lb):
                    for v in range(sb):
                        b = B[kb, u, v]
                        if b == 0:
                            continue
                        c = mul[a, tw[i, j, b]]
                        e1 = i + u
                        while e1 >= l:
                            e1 -= l
                            c = mul[c, lam1]
                        e2 = j + v
                        while e2 >= s:
                            e2 -= s
                            c = mul[c, lam2]
                        out[k, e1, e2] = add[out[k, e1, e2], c]
    return out


def fold_mul_batch(A, B, l, s, lam1, lam2, add, mul, tw):
    if A.shape[0] != B.shape[0] and 1 not in (A.shape[0], B.shape[0]):
        raise ValueError("batch sizes do not broadcast")
    return _fold_mul(
        np.ascontiguousarray(A, dtype=np.int64), np.ascontiguousarray(B, dtype=np.int64),
        l, s, lam1, lam2, add, mul, tw,
    )


@njit(cache=True)
def _right_remainder(F, G, add, mul, neg, tw):
    nf, L, S = F.shape
    ng = G.shape[0]
    ga = G.shape[1] - 1
    gb = G.shape[2] - 1
    n = max(nf, ng)
    R = np.empty((n, L, S), dtype=np.int64)
    for k in range(n):
        kf = k if nf > 1 else 0
        kg = k if ng > 1 else 0
        for i in range(L):
            for j in range(S):
                R[k, i, j] = F[kf, i, j]
        for j in range(S - 1, gb - 1, -1):
            for i in range(L - 1, ga - 1, -1):
                c = R[k, i, j]
                if c == 0:
                    continue
                nc = neg[c]
                a = i - ga
                b = j - gb
                for u in range(ga + 1):
                    for v in range(gb + 1):
                        g = G[kg, u, v]
                        if g == 0:
                            continue
                        R[k, a + u, b + v] = add[R[k, a + u, b + v], mul[nc, tw[a, b, g]]]
    return R


def right_remainder_batch(F, G, add, mul, neg, tw):
    if F.shape[0] != G.shape[0] and 1 not in (F.shape[0], G.shape[0]):
        raise ValueError("batch sizes do not broadcast")
    return _right_remainder(
        np.ascontiguousarray(F, dtype=np.int64), np.ascontiguousarray(G, dtype=np.int64),
        add, mul, neg, tw,
    )


@njit(cache=True)
def _rref(R, add, mul, neg, inv):
    rows, cols = R.shape
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = -1
        for i in range(r, rows):
            if R[i, c] != 0:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            for t in range(cols):
                tmp = R[r, t]
                R[r, t] = R[p, t]
                R[p, t] = tmp
        iv = inv[R[r, c]]
        for t in range(cols):
            R[r, t] = mul[iv, R[r, t]]
        for i in range(rows):
            if i == r:
                continue
            f = R[i, c]
            if f == 0:
                continue
            nf = neg[f]
            for t in range(cols):
                R[i, t] = add[R[i, t], mul[nf, R[r, t]]]
        pivots[r] = c
        r += 1
    return R, pivots[:r].copy(), r


def rref(M, add, mul, neg, inv):
    R = np.array(M, dtype=np.int64, copy=True)
    return _rref(R, add, mul, neg, inv)


@njit(cache=True)
def _in_span(R, pivots, rank, W, add, mul, neg):
    n, cols = W.shape
    out = np.empty(n, dtype=np.bool_)
    for k in range(n):
        for r in range(rank):
            c = W[k, pivots[r]]
            if c == 0:
                continue
            nc = neg[c]
            for t in range(cols):
                W[k, t] = add[W[k, t], mul[nc, R[r, t]]]
        ok = True
        for t in range(cols):
            if W[k, t] != 0:
                ok = False
                break
        out[k] = ok
    return out


def in_span_batch(R, pivots, rank, V, add, mul, neg):
    W = np.array(V, dtype=np.int64, copy=True)
    return _in_span(np.ascontiguousarray(R), np.ascontiguousarray(pivots), rank, W, add, mul, neg)


@njit(cache=True)
def _span_enumerate(B, q, add, mul):
    k, n = B.shape
    total = 1
    for _ in range(k):
        total *= q
    out = np.zeros((total, n), dtype=np.int64)
    row = np.zeros(n, dtype=np.int64)
    size = 1
    for r in range(k):
        # word w of the first r rows becomes words w*q + c; walk w downwards
        # so that no unread word is overwritten
        for w in range(size - 1, -1, -1):
            row[:] = out[w]
            for c in range(q - 1, -1, -1):
                for t in range(n):
                    out[w * q + c, t] = add[row[t], mul[c, B[r, t]]]
        size *= q
    return out


def span_enumerate(B, q, add, mul):
    return _span_enumerate(np.ascontiguousarray(B, dtype=np.int64), q, add, mul)


@njit(cache=True)
def _dot(A, B, add, mul):
    na, n_cols = A.shape
    nb = B.shape[0]
    n = max(na, nb)
    out = np.zeros(n, dtype=np.int64)
    for k in range(n):
        ka = k if na > 1 else 0
        kb = k if nb > 1 else 0
        acc = 0
        for t in range(n_cols):
            acc = add[acc, mul[A[ka, t], B[kb, t]]]
        out[k] = acc
    return out


def dot_batch(A, B, add, mul):
    if A.shape[0] != B.shape[0] and 1 not in (A.shape[0], B.shape[0]):
        raise ValueError("batch sizes do not broadcast")
    return _dot(np.ascontiguousarray(A, dtype=np.int64), np.ascontiguousarray(B, dtype=np.int64), add, mul)
