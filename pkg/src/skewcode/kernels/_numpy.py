"""Pure-numpy kernels, vectorised over the batch axis.

All element arrays hold integer codes; ``add``/``mul``/``neg``/``inv`` are the
ring tables and ``tw[i, j]`` is the code permutation of ρ^i θ^j.
"""

import numpy as np


def _batch(n_a, n_b):
    if n_a != n_b and 1 not in (n_a, n_b):
        raise ValueError(f"batch sizes {n_a} and {n_b} do not broadcast")
    return max(n_a, n_b)


def fold_mul_batch(A, B, l, s, lam1, lam2, add, mul, tw):
    """Star products A[n] ⋆ B[n], exponents folded by x^l = lam1, y^s = lam2.

    With ``l >= la + lb - 1`` and ``s >= sa + sb - 1`` nothing folds and the
    result is the plain product on an (l, s) box.
    """
    n = _batch(A.shape[0], B.shape[0])
    la, sa = A.shape[1:]
    lb, sb = B.shape[1:]
    out = np.zeros((n, l, s), dtype=np.int64)
    for i in range(la):
        for j in range(sa):
            a = A[:, i, j]
            if not a.any():
                continue
            twisted = tw[i, j][B]
            for u in range(lb):
                e1, f1 = i + u, 1
                while e1 >= l:
                    e1 -= l
                    f1 = mul[f1, lam1]
                for v in range(sb):
                    e2, f = j + v, f1
                    while e2 >= s:
                        e2 -= s
                        f = mul[f, lam2]
                    term = mul[a, twisted[:, u, v]]
                    if f != 1:
                        term = mul[term, f]
                    out[:, e1, e2] = add[out[:, e1, e2], term]
    return out


def right_remainder_batch(F, G, add, mul, neg, tw):
    """Remainders of F[n] divided on the right by G[n].

    Each G[n] has its leading coefficient 1 in the corner ``G[n, -1, -1]``
    and support inside its box; the dividend box must be at least as large.
    Positions are reduced in descending ⇒ order (y-exponent first).
    """
    n = _batch(F.shape[0], G.shape[0])
    L, S = F.shape[1:]
    ga, gb = G.shape[1] - 1, G.shape[2] - 1
    R = np.array(np.broadcast_to(F, (n, L, S)), dtype=np.int64)
    for j in range(S - 1, gb - 1, -1):
        for i in range(L - 1, ga - 1, -1):
            c = R[:, i, j]
            if not c.any():
                continue
            nc = neg[c]
            twisted = tw[i - ga, j - gb][G]
            for u in range(ga + 1):
                for v in range(gb + 1):
                    r, t = i - ga + u, j - gb + v
                    R[:, r, t] = add[R[:, r, t], mul[nc, twisted[:, u, v]]]
    return R


def rref(M, add, mul, neg, inv):
    """Reduced row echelon form; returns (R, pivot columns, rank)."""
    R = np.array(M, dtype=np.int64, copy=True)
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            R[[r, p]] = R[[p, r]]
        R[r] = mul[inv[R[r, c]], R[r]]
        f = R[:, c].copy()
        f[r] = 0
        hit = np.nonzero(f)[0]
        if hit.size:
            R[hit] = add[R[hit], mul[neg[f[hit]][:, None], R[r][None, :]]]
        pivots.append(c)
        r += 1
    return R, np.array(pivots, dtype=np.int64), r


def in_span_batch(R, pivots, rank, V, add, mul, neg):
    """Whether each row of V lies in the row space of the RREF matrix R."""
    W = np.array(V, dtype=np.int64, copy=True)
    for k in range(rank):
        c = W[:, pivots[k]]
        hit = np.nonzero(c)[0]
        if hit.size:
            W[hit] = add[W[hit], mul[neg[c[hit]][:, None], R[k][None, :]]]
    return ~W.any(axis=1)


def span_enumerate(B, q, add, mul):
    """All q^k linear combinations of the k rows of B (row-major counter order,
    first basis row varying slowest)."""
    k, n = B.shape
    words = np.zeros((1, n), dtype=np.int64)
    coeffs = np.arange(q, dtype=np.int64)
    for r in range(k):
        scaled = mul[coeffs[:, None], B[r][None, :]]  # (q, n)
        words = add[words[:, None, :], scaled[None, :, :]].reshape(-1, n)
    return words


def dot_batch(A, B, add, mul):
    """Σ A[n, k] B[n, k] for each n (broadcast over n)."""
    n = _batch(A.shape[0], B.shape[0])
    prod = mul[np.broadcast_to(A, (n, A.shape[1])), np.broadcast_to(B, (n, B.shape[1]))]
    acc = np.zeros(n, dtype=np.int64)
    for k in range(prod.shape[1]):
        acc = add[acc, prod[:, k]]
    return acc
