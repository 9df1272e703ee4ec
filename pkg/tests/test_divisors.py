import pytest

from skewcode import QuotientContext, RingSpec, UsageError, right_divides
from skewcode.divisors import naive_right_divisors, right_divisors, univariate_right_divisors


@pytest.mark.parametrize(
    "name,rho,theta,l,s,lam1,lam2",
    [
        ("gf4", 1, 1, 2, 2, "1", "1"),
        ("gf2", 0, 0, 3, 3, "1", "1"),
        ("gf9", 1, 1, 2, 2, "2", "2"),
        ("gf9", 1, 1, 2, 2, "1", "2"),
    ],
)
def test_pruned_search_matches_naive(name, rho, theta, l, s, lam1, lam2):
    ring = RingSpec.from_name(name)
    ctx = QuotientContext.create(ring, rho, theta, l, s, ring(lam1), ring(lam2))
    fast, slow = right_divisors(ctx), naive_right_divisors(ctx, budget=10**8)
    assert fast.complete
    assert fast.divisors == slow.divisors
    assert fast.evaluated < slow.evaluated
    for g in fast.divisors:
        assert g.is_monic() and right_divides(g, ctx.diamond_modulus)


def test_gf4_divisor_count(ctx4):
    assert len(right_divisors(ctx4).divisors) == 31


def test_univariate_divisors(ctx4, gf4):
    found = univariate_right_divisors(ctx4, "x")
    # x^2 - 1 = (x + 1)^2 in characteristic 2; x - c divides iff rho(c) c = 1 ... every unit
    assert len(found[0]) == 1 and len(found[2]) == 1
    assert sorted(int(v[0]) for v in found[1]) == sorted(u.code for u in gf4.units())
    with pytest.raises(UsageError):
        univariate_right_divisors(ctx4, "z")


def test_budget_skips_degrees(ctx9):
    search = right_divisors(ctx9, budget=1)
    assert not search.complete and search.skipped_degrees
    assert set(search.divisors) <= set(right_divisors(ctx9).divisors)


def test_search_needs_a_field():
    ring = RingSpec.from_name("z4")
    with pytest.raises(UsageError):
        right_divisors(QuotientContext.create(ring, 0, 0, 2, 2, 1, 1))
