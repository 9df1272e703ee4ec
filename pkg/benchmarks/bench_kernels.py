"""Numba kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each workload is run once to warm up (JIT compile), checked for equal
output across backends, then timed with timeit.
"""

import argparse
from timeit import timeit

import numpy as np

from skewcode import QuotientContext, RingSpec, kernels
from skewcode.quotient import twist_table


def workloads():
    rng = np.random.default_rng(0)
    gf9 = RingSpec.from_name("gf9")
    ctx = QuotientContext.create(gf9, 1, 1, 4, 2, gf9(2), gf9(1))
    add, mul, neg, inv = gf9.add_table, gf9.mul_table, gf9.neg_table, gf9.inv_table
    tw = twist_table(ctx.skew, 5, 3)

    A = rng.integers(0, 9, size=(20_000, 4, 2))
    B = rng.integers(0, 9, size=(1, 4, 2))
    yield "fold_mul_batch 20k products in R°", lambda k: k.fold_mul_batch(A, B, 4, 2, 2, 1, add, mul, tw[:4, :2])

    M = ctx.diamond_modulus.to_dense((5, 3))[None]
    G = rng.integers(0, 9, size=(20_000, 3, 2))
    G[:, 2, 1] = 1
    yield "right_remainder_batch 20k divisions", lambda k: k.right_remainder_batch(M, G, add, mul, neg, tw)

    W = rng.integers(0, 9, size=(60, 8))
    yield "rref 60x8", lambda k: k.rref(W, add, mul, neg, inv)

    R, piv, r = kernels.numpy_backend.rref(W[:5], add, mul, neg, inv)
    V = rng.integers(0, 9, size=(50_000, 8))
    yield "in_span_batch 50k words", lambda k: k.in_span_batch(R, piv, r, V, add, mul, neg)

    Bs = R[:r]
    yield f"span_enumerate 9^{r} words", lambda k: k.span_enumerate(Bs, 9, add, mul)

    X, Y = rng.integers(0, 9, size=(200_000, 8)), rng.integers(0, 9, size=(1, 8))
    yield "dot_batch 200k pairs", lambda k: k.dot_batch(X, Y, add, mul)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    nb, npb = kernels.numba_backend, kernels.numpy_backend
    if nb is None:
        print("numba backend unavailable (SKEWCODE_DISABLE_NUMBA set or numba missing); timing numpy only")
    print(f"{'workload':40s} {'numpy ms':>10s} {'numba ms':>10s} {'speedup':>8s}")
    for name, run in workloads():
        ref = run(npb)
        t_np = timeit(lambda: run(npb), number=args.repeat) / args.repeat * 1e3
        if nb is None:
            print(f"{name:40s} {t_np:10.2f} {'-':>10s} {'-':>8s}")
            continue
        out = run(nb)  # compile
        same = all(np.array_equal(a, b) for a, b in zip(out, ref)) if isinstance(ref, tuple) else np.array_equal(out, ref)
        assert same, f"backends disagree on {name}"
        t_nb = timeit(lambda: run(nb), number=args.repeat) / args.repeat * 1e3
        print(f"{name:40s} {t_np:10.2f} {t_nb:10.2f} {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
