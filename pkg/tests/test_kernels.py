import os
import subprocess
import sys

import numpy as np
import pytest

from skewcode import QuotientContext, RingSpec, kernels
from skewcode.quotient import twist_table

pytestmark = pytest.mark.skipif(kernels.numba_backend is None, reason="numba unavailable")
NB, NP = kernels.numba_backend, kernels.numpy_backend


@pytest.fixture(params=[("gf4", 1, 1, 2, 2, "1", "1"), ("gf9", 1, 1, 4, 2, "2", "1"), ("gf8", 1, 2, 3, 3, "1", "1")])
def ctx(request):
    name, rho, theta, l, s, lam1, lam2 = request.param
    ring = RingSpec.from_name(name)
    return QuotientContext.create(ring, rho, theta, l, s, ring(lam1), ring(lam2))


def test_fold_mul(ctx):
    ring = ctx.ring
    rng = np.random.default_rng(1)
    A = rng.integers(0, ring.size, size=(50,) + ctx.shape)
    B = rng.integers(0, ring.size, size=(50,) + ctx.shape)
    tw = twist_table(ctx.skew, *ctx.shape)
    args = (ctx.l, ctx.s, ctx.lambda1.code, ctx.lambda2.code, ring.add_table, ring.mul_table, tw)
    assert np.array_equal(NB.fold_mul_batch(A, B, *args), NP.fold_mul_batch(A, B, *args))
    assert np.array_equal(NB.fold_mul_batch(A, B[:1], *args), NP.fold_mul_batch(A, B[:1], *args))


def test_right_remainder(ctx):
    ring = ctx.ring
    rng = np.random.default_rng(2)
    M = ctx.diamond_modulus.to_dense((ctx.l + 1, ctx.s + 1))[None]
    F = rng.integers(0, ring.size, size=(40, ctx.l + 2, ctx.s + 2))
    G = rng.integers(0, ring.size, size=(40, 2, 2))
    G[:, 1, 1] = 1
    tw = twist_table(ctx.skew, ctx.l + 2, ctx.s + 2)
    t = (ring.add_table, ring.mul_table, ring.neg_table, tw)
    assert np.array_equal(NB.right_remainder_batch(F, G, *t), NP.right_remainder_batch(F, G, *t))
    assert np.array_equal(NB.right_remainder_batch(M, G, *t[:3], twist_table(ctx.skew, ctx.l + 1, ctx.s + 1)),
                          NP.right_remainder_batch(M, G, *t[:3], twist_table(ctx.skew, ctx.l + 1, ctx.s + 1)))


def test_linear_algebra(ctx):
    ring = ctx.ring
    rng = np.random.default_rng(3)
    tabs = (ring.add_table, ring.mul_table, ring.neg_table, ring.inv_table)
    for rows in (1, 3, 6):
        M = rng.integers(0, ring.size, size=(rows, 6))
        M[-1] = 0
        R1, p1, r1 = NB.rref(M, *tabs)
        R2, p2, r2 = NP.rref(M, *tabs)
        assert r1 == r2 and np.array_equal(R1, R2) and np.array_equal(p1[:r1], p2[:r2])
        V = rng.integers(0, ring.size, size=(30, 6))
        V[:3] = M[: min(3, rows)][0]
        assert np.array_equal(NB.in_span_batch(R1, p1, r1, V, *tabs[:3]), NP.in_span_batch(R2, p2, r2, V, *tabs[:3]))
        B = R1[:r1]
        if ring.size**r1 <= 4096:
            assert np.array_equal(NB.span_enumerate(B, ring.size, *tabs[:2]), NP.span_enumerate(B, ring.size, *tabs[:2]))
    A = rng.integers(0, ring.size, size=(20, 6))
    B = rng.integers(0, ring.size, size=(20, 6))
    assert np.array_equal(NB.dot_batch(A, B, *tabs[:2]), NP.dot_batch(A, B, *tabs[:2]))


def _backend_with(env_value):
    env = dict(os.environ, SKEWCODE_DISABLE_NUMBA=env_value)
    out = subprocess.run(
        [sys.executable, "-c", "import skewcode.kernels as k; print(k.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    return out.stdout.strip()


def test_env_flag_selects_numpy():
    assert _backend_with("1") == "numpy"
    assert _backend_with("0") == "numba"
