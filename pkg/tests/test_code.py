import numpy as np
import pytest

from skewcode import NotAGeneratorError, QuotientContext, RingSpec, UsageError, reduce
from skewcode import linalg
from skewcode.code import (
    build_code,
    check_gxy_criterion,
    column_shift,
    is_2d_skew_constacyclic,
    membership_via_h,
    membership_via_h_batch,
    min_distance,
    min_distance_bound,
    minimal_degree_generator,
    row_shift,
)
from skewcode.divisors import right_divisors


def test_column_shift_plain_cyclic():
    ring = RingSpec.from_name("gf5")
    ctx = QuotientContext.create(ring, 0, 0, 2, 2, 1, 1)
    c = np.array([[1, 2], [3, 4]])
    assert column_shift(ctx, c).tolist() == [[3, 4], [1, 2]]
    assert row_shift(ctx, c).tolist() == [[2, 1], [4, 3]]


def test_column_shift_applies_frobenius(ctx4, gf4):
    c = [["a", 0], [0, 0]]
    out = column_shift(ctx4, c)
    assert out.tolist() == [[0, 0], [gf4("a^2").code, 0]]


@pytest.mark.parametrize("lam", ["1", "2"])
def test_l_shifts_scale_by_lambda(gf9, lam):
    ctx = QuotientContext.create(gf9, 1, 1, 2, 2, lam, lam)
    rng = np.random.default_rng(3)
    for _ in range(20):
        c = rng.integers(0, 9, size=(2, 2))
        out = c
        for _ in range(2):
            out = column_shift(ctx, out)
        assert np.array_equal(out, gf9.mul_table[ctx.lambda1.code, c])


def test_y_minus_one_code(ctx9):
    S = ctx9.skew
    code = build_code(ctx9, S.parse("y - 1"))
    assert (code.k, code.t) == (2, 1)
    assert code.cardinality == 81 and code.codewords().shape[0] == 81
    assert [b.lift() for b in code.basis] == [S.parse("y - 1"), S.parse("x*y - x")]
    assert code.basis_spans_code
    for b in code.basis:
        assert code.contains(b)
    assert code.contains(np.zeros((2, 2), dtype=int))
    assert not code.contains(S.parse("y + 1"))
    # brute-force oracle for the distance
    words = code.codewords()
    assert min_distance(code) == int((words != 0).sum(axis=1)[1:].min()) == 2
    assert min_distance_bound(code) >= 2


def test_full_code(ctx9):
    code = build_code(ctx9, ctx9.skew.one)
    assert code.cardinality == 9**4 and code.dimension == 4
    assert min_distance(code) == 1


def test_build_rejects_non_divisors(ctx9):
    with pytest.raises(NotAGeneratorError) as info:
        build_code(ctx9, ctx9.skew.parse("x + y"))
    assert not info.value.remainder.is_zero()
    with pytest.raises(UsageError):
        build_code(ctx9, ctx9.skew.parse("2*y"))


def test_codes_need_a_field():
    ring = RingSpec.from_name("z4")
    ctx = QuotientContext.create(ring, 0, 0, 2, 2, 1, 1)
    with pytest.raises(UsageError):
        build_code(ctx, ctx.skew.one)


def test_membership_via_cofactor_examples(ctx9):
    S = ctx9.skew
    code = build_code(ctx9, S.parse("y - 1"))
    assert membership_via_h(code, code.g)
    assert not membership_via_h(code, S.one)


def test_membership_via_cofactor_needs_box_inputs(ctx9):
    # x^2 - 1 is 0 in the quotient, so it lies in every code, but
    # (x^2 - 1) ⋆ h is not a multiple of the product modulus.
    S = ctx9.skew
    code = build_code(ctx9, S.parse("y - 1"))
    f = S.parse("x^2 - 1")
    assert code.contains(f)
    assert not membership_via_h(code, f)


def test_shift_closure(ctx4, ctx9):
    code = build_code(ctx9, ctx9.skew.parse("y - 1"))
    assert is_2d_skew_constacyclic(ctx9, code.basis)
    assert not is_2d_skew_constacyclic(ctx4, [[[1, 0], [0, 0]]])
    assert is_2d_skew_constacyclic(ctx4, [np.zeros((2, 2), dtype=int)])


def test_minimal_degree_generator(ctx9):
    S = ctx9.skew
    code = build_code(ctx9, S.parse("y - 1"))
    found = minimal_degree_generator(ctx9, code.basis)
    assert found.generator == S.parse("y - 1")
    assert minimal_degree_generator(ctx9, np.eye(4, dtype=int).reshape(4, 2, 2)).generator == S.one
    assert minimal_degree_generator(ctx9, [np.zeros((2, 2), dtype=int)]).generator is None


def test_gxy_criterion(ctx4, ctx9):
    rep = check_gxy_criterion(build_code(ctx4, ctx4.skew.parse("x + 1")))
    assert rep.applicable and rep.lhs and rep.rhs
    # rho*theta is the identity on GF(9): the rhs always holds
    for g in right_divisors(ctx9).divisors:
        rep = check_gxy_criterion(build_code(ctx9, g))
        assert not rep.applicable or (rep.lhs and rep.rhs)


def test_gxy_not_applicable_for_non_staircase(ctx9):
    code = build_code(ctx9, ctx9.skew.parse("x*y + 2*y + 2*x + 1"))
    # (x - 1) ⋆ (y - 1): the coefficient at (1, 0) is 2, not 1
    rep = check_gxy_criterion(code)
    assert not rep.applicable and rep.agrees


def test_k_t_words_can_miss_the_ideal(ctx4):
    """With nontrivial automorphisms the k·t words x^i y^j ⋆ g (i < k, j < t)
    need not span the left ideal generated by g."""
    S = ctx4.skew
    g = S.parse("x*y + y + a*x + a")
    h = S.parse("x*y + y + a*x + a^2")
    assert h * g == ctx4.diamond_modulus
    code = build_code(ctx4, g)
    assert (code.k, code.t) == (1, 1)
    xg = reduce(ctx4, S.x * g)
    assert xg.lift() == S.parse("x*y + y + a^2*x + a^2")
    assert not linalg.in_span(ctx4.ring, reduce(ctx4, g).codes.reshape(1, -1), xg.codes.reshape(1, -1))[0]
    assert code.dimension == 2 and not code.basis_spans_code
    # the ideal holds x + 1, of smaller degree than g
    assert code.contains(S.parse("x + 1"))
    # the span of the k·t words alone is not shift-closed
    assert not is_2d_skew_constacyclic(ctx4, code.basis)


def test_cofactor_membership_tracks_the_kt_span(ctx4):
    # reduced codewords are annihilated by h exactly when they lie in the k·t span
    for g in right_divisors(ctx4).divisors:
        code = build_code(ctx4, g)
        words = linalg.enumerate_span(ctx4.ring, code.gen_matrix, 1 << 16)
        killed = membership_via_h_batch(code, words.reshape((-1,) + ctx4.shape))
        B = np.array([b.codes.reshape(-1) for b in code.basis], dtype=np.int64).reshape(-1, code.length)
        in_b = linalg.in_span(ctx4.ring, B, words)
        assert np.array_equal(killed, in_b), g
        assert killed.all() == code.basis_spans_code


def test_commutative_case_keeps_the_basis(gf4):
    ctx = QuotientContext.create(gf4, 0, 0, 2, 2, 1, 1)
    for g in right_divisors(ctx).divisors:
        code = build_code(ctx, g)
        assert code.basis_spans_code, g


def test_code_json(ctx9):
    doc = build_code(ctx9, ctx9.skew.parse("y - 1")).to_json(with_distance=True)
    assert doc["k"] == 2 and doc["t"] == 1 and doc["cardinality"] == 81
    assert doc["basis"] == ["y + 2", "x*y + 2*x"]
    assert doc["min_distance"] == 2
    assert len(doc["gen_matrix"]) == 2
