import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewcode import QuotientContext, UsageError, reduce, reduce_diamond, star_mul_mod
from skewcode.poly import right_divide
from skewcode.quotient import four_sum_product, from_array, mul_codes_batch, reduce_stepwise


def test_reduce_examples(gf9, ctx4):
    ctx = QuotientContext.create(gf9, 1, 1, 2, 2, 2, 1)
    assert reduce(ctx, ctx.skew.parse("x^3")) == reduce(ctx, ctx.skew.parse("2*x"))
    S = ctx4.skew
    assert reduce(ctx4, S.parse("x^2*y^2")) == reduce(ctx4, S.one)


def test_products(ctx4):
    S = ctx4.skew
    one = reduce(ctx4, S.one)
    A = reduce(ctx4, S.parse("a*x + y + a^2"))
    assert A * one == A
    assert reduce(ctx4, S.x) * reduce(ctx4, S.x) == one
    ax = reduce(ctx4, S.parse("a*x"))
    assert ax * ax == one


def test_diamond(ctx9_2):
    S = ctx9_2.skew
    assert reduce_diamond(ctx9_2, ctx9_2.diamond_modulus).is_zero()
    small = S.parse("a*x*y + 2*x + 1")
    assert reduce_diamond(ctx9_2, small) == small
    f = S.parse("x^2*y^2")
    r = reduce_diamond(ctx9_2, f)
    assert r == S.parse("2*y^2 + 2*x^2 + 2")
    q, rem = right_divide(f - r, ctx9_2.diamond_modulus)
    assert rem.is_zero() and q * ctx9_2.diamond_modulus == f - r


def test_standing_assumptions(gf4, gf9):
    with pytest.raises(UsageError, match="not fixed"):
        QuotientContext.create(gf4, 1, 1, 2, 2, "a", 1)
    with pytest.raises(UsageError, match="does not divide"):
        QuotientContext.create(gf4, 1, 1, 3, 2, 1, 1)
    with pytest.raises(UsageError, match="not a unit"):
        QuotientContext.create(gf9, 1, 1, 2, 2, 0, 1)
    ctx = QuotientContext.unchecked(gf4, 1, 1, 3, 2, 1, 1)
    assert not ctx.checked


def test_unchecked_reduction_is_not_multiplicative(gf4):
    ctx = QuotientContext.unchecked(gf4, 1, 1, 3, 2, 1, 1)
    S = ctx.skew
    f, g = S.parse("x^3"), S.const("a")
    assert reduce(ctx, f * g) != reduce(ctx, reduce(ctx, f).lift() * g)


def test_from_array_and_json(ctx9):
    A = from_array(ctx9, [["1", "a"], [0, "2"]])
    assert str(A) == "2*x*y + a*y + 1"
    assert QuotientContext.from_json(ctx9.to_json()) == ctx9
    with pytest.raises(UsageError):
        from_array(ctx9, [[1, 2, 3]])


def test_mixed_contexts(ctx9, ctx9_2):
    with pytest.raises(UsageError):
        reduce(ctx9, ctx9.skew.one) + reduce(ctx9_2, ctx9_2.skew.one)


def test_negative_exponents_rejected(ctx4):
    with pytest.raises(UsageError):
        reduce(ctx4, ctx4.skew.parse("x^-1"))


CONTEXTS = [
    ("gf4", 1, 1, 2, 2, "1", "1"),
    ("gf9", 1, 1, 2, 2, "2", "1"),
    ("gf9", 1, 1, 4, 2, "2", "2"),
    ("gf8", 1, 2, 3, 3, "1", "1"),
    ("z4", 0, 0, 2, 3, "3", "1"),
]


def _ctx(entry):
    from skewcode import RingSpec

    name, rho, theta, l, s, lam1, lam2 = entry
    ring = RingSpec.from_name(name)
    return QuotientContext.create(ring, rho, theta, l, s, ring(lam1), ring(lam2))


@settings(max_examples=120, deadline=None)
@given(st.sampled_from(CONTEXTS), st.data())
def test_reduction_is_a_ring_map(entry, data):
    ctx = _ctx(entry)
    q = ctx.ring.size
    shape = (ctx.l + 2, ctx.s + 2)
    draw = lambda: ctx.skew.from_dense(  # noqa: E731
        np.array(data.draw(st.lists(st.integers(0, q - 1), min_size=shape[0] * shape[1], max_size=shape[0] * shape[1]))).reshape(shape)
    )
    f, g = draw(), draw()
    rf, rg = reduce(ctx, f), reduce(ctx, g)
    assert reduce(ctx, f * g) == star_mul_mod(rf, rg)
    assert reduce(ctx, f + g) == rf + rg
    assert four_sum_product(rf, rg) == rf * rg
    assert np.array_equal(mul_codes_batch(ctx, rf.codes[None], rg.codes[None])[0], (rf * rg).codes)
    assert reduce_stepwise(ctx, f, "x-first") == reduce_stepwise(ctx, f, "y-first") == rf
