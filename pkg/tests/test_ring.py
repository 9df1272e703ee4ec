import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewcode import NotAUnitError, RingSpec, UsageError
from skewcode.errors import CapExceededError
from skewcode.ring import AutomorphismPair, automorphism_order, enumerate_elements, is_irreducible, iter_codes


def test_gf4_generator_squared(gf4):
    a = gf4("a")
    assert a * a == gf4("a+1")
    assert gf4("a+1") == gf4("[1,1]") == gf4("a^2")


def test_zn_arithmetic(z4):
    assert z4(2) * z4(2) == z4(0)
    assert z4(3).inverse() == z4(3)
    with pytest.raises(NotAUnitError):
        z4(2).inverse()


@pytest.mark.parametrize("name", ["gf4", "gf9", "gf8", "z4", "z6", "gf5"])
def test_additive_inverse(name):
    ring = RingSpec.from_name(name)
    for e in ring.elements():
        assert e + (-e) == ring.zero


def test_gf4_inverse(gf4):
    assert gf4("a").inverse() == gf4("a+1")


def test_frobenius(gf4, gf9):
    rho = AutomorphismPair(1, 0)
    assert rho.apply(gf4("a"), "rho") == gf4("a+1")
    for e in gf9.elements():
        assert AutomorphismPair(0, 0).apply(e, "rho") == e
        assert AutomorphismPair(2, 0).apply(e, "rho") == e


def test_automorphism_orders(gf4):
    assert automorphism_order(gf4, 1) == 2
    assert automorphism_order(gf4, 0) == 1
    assert automorphism_order(RingSpec.gf(2, 6), 2) == 3


def test_fixed_elements(gf4, gf9):
    frob = AutomorphismPair(1, 1)
    assert not frob.is_fixed(gf4("a"), "rho")
    assert frob.is_fixed(gf4(1), "rho", "theta")
    assert frob.is_fixed(gf9(2), "rho")
    assert [str(e) for e in gf9.elements() if frob.is_fixed(e)] == ["0", "1", "2"]


def test_enumeration(gf4, gf9, z4):
    assert len(gf4.elements()) == 4
    assert [e.code for e in z4.elements()] == [0, 1, 2, 3]
    assert len(enumerate_elements(gf9)) == 9
    with pytest.raises(CapExceededError):
        list(iter_codes(gf9, cap=5))


def test_names_and_json():
    assert RingSpec.from_name("gf2^3") == RingSpec.from_name("gf8")
    assert RingSpec.from_json({"kind": "zn", "n": 4}) == RingSpec.from_name("z4")
    spec = RingSpec.from_name("gf9").to_json()
    assert RingSpec.from_json(spec) == RingSpec.from_name("gf9")
    for bad in ["gf6", "q7", "gf1"]:
        with pytest.raises(UsageError):
            RingSpec.from_name(bad)


def test_modulus_must_be_irreducible():
    assert is_irreducible([1, 1, 1], 2)
    assert not is_irreducible([1, 0, 1], 2)
    with pytest.raises(UsageError):
        RingSpec.gf(2, 2, [1, 0, 1])


def test_zn_has_only_identity():
    with pytest.raises(UsageError):
        AutomorphismPair(1, 0).validate(RingSpec.from_name("z4"))


def test_mixed_rings_rejected(gf4, gf9):
    with pytest.raises(UsageError):
        gf4(1) + gf9(1)


@pytest.mark.parametrize("name", ["gf4", "gf8", "gf9", "gf16", "gf25", "z6"])
def test_text_round_trip(name):
    ring = RingSpec.from_name(name)
    for e in ring.elements():
        assert ring(str(e)) == e


FIELDS = ["gf8", "gf9", "gf25", "gf27"]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_field_axioms(name, data):
    ring = RingSpec.from_name(name)
    a, b, c = (ring.element(data.draw(st.integers(0, ring.size - 1))) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a:
        assert a * a.inverse() == ring.one


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(FIELDS), st.integers(0, 5), st.data())
def test_frobenius_is_automorphism(name, e, data):
    ring = RingSpec.from_name(name)
    a, b = (ring.element(data.draw(st.integers(0, ring.size - 1))) for _ in range(2))
    f = AutomorphismPair(e, 0)
    assert f.apply(a * b) == f.apply(a) * f.apply(b)
    assert f.apply(a + b) == f.apply(a) + f.apply(b)
    assert f.apply(f.apply(a, "rho^-1")) == a
