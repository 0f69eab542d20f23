from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopfhom.qpbw import (UqSl2, RewritingSystem, DegreeOverflow, PreconditionNotMet, resolution_maps,
                          apply_d, augmentation, dd_check, homotopy_check, collapsed_complex,
                          collapsed_tor, hc_inference, euler_characteristic)

U2 = UqSl2(2)
words = st.lists(st.sampled_from("stxy"), max_size=4).map("".join)


def test_normal_form_examples():
    q2 = Fraction(4)
    assert U2.normal_form("xs") == {(1, 1, 0): 1 / q2}
    assert U2.normal_form("st") == U2.normal_form("ts") == U2.one()
    assert U2.normal_form("yx") == U2.add(U2.mono(0, 1, 1), U2.scale(U2.K(), -1))
    assert U2.normal_form("ys") == {(1, 0, 1): q2}


def test_rejects_bad_q():
    for q in (0, 1, -1):
        with pytest.raises(ValueError):
            UqSl2(q)


def test_degree_overflow():
    U = UqSl2(2, max_degree=3)
    with pytest.raises(DegreeOverflow):
        U.mul(U.mono(0, 2, 0), U.mono(0, 0, 2))


def test_rewriting_system_is_generic():
    # a commutative polynomial ring in two letters
    R = RewritingSystem({("b", "a"): [(1, ("a", "b"))]})
    assert R.normal_form("bab") == {("a", "b", "b"): 1}


@settings(max_examples=30)
@given(words, words, words)
def test_multiplication_is_associative(u, v, w):
    a, b, c = (U2.normal_form(z) for z in (u, v, w))
    assert U2.mul(U2.mul(a, b), c) == U2.mul(a, U2.mul(b, c)) == U2.normal_form(u + v + w)


@settings(max_examples=30)
@given(words, words)
def test_counit_is_multiplicative(u, v):
    a, b = U2.normal_form(u), U2.normal_form(v)
    assert U2.eps(U2.mul(a, b)) == U2.eps(a) * U2.eps(b)


@pytest.mark.parametrize("q", [2, 3, Fraction(1, 2)])
def test_hopf_identities(q):
    assert UqSl2(q).hopf_checks(2)


def test_antipode_of_x():
    x = U2.mono(0, 1, 0)
    D = U2.coproduct(x)
    total = {}
    for (a, b), c in D.items():
        total = U2.add(total, U2.mul(U2.antipode({a: 1}), {b: 1}), c)
    assert total == {} and U2.eps(x) == 0


def test_d0_on_x():
    maps, U, E = resolution_maps(2)
    assert maps[0]["x"] == {"1": {((0, 1, 0), (0, 0, 0)): 1, ((0, 0, 0), (0, 1, 0)): -1}}


@pytest.mark.parametrize("q", [2, 3, 5])
def test_corrected_resolution_squares_to_zero(q):
    v = dd_check(q)
    assert v, v.witness


def test_d1_d2_on_top_generator():
    maps, U, E = resolution_maps(2)
    top = {"xys": E.el((1, U.one(), U.one()))}
    assert apply_d(E, maps, 1, apply_d(E, maps, 2, top)) == {}


def test_verbatim_resolution_fails():
    v = dd_check(2, "verbatim")
    assert not v
    assert v.witness == {"condition": "d0 d1 = 0", "generator": "xs"}


def test_augmentation_kills_d0():
    maps, U, E = resolution_maps(3)
    for g in ("x", "y", "s"):
        assert augmentation(E, apply_d(E, maps, 0, {g: E.el((1, U.one(), U.one()))})) == {}


@pytest.mark.parametrize("q", [2, 3])
def test_homotopy_sweep(q):
    v = homotopy_check(q)
    assert v, v.witness
    assert v.details["checked"] == 1920


def test_homotopy_small_cases():
    assert homotopy_check(2, bound=(0, 0, 0))
    assert homotopy_check(2, bound=(1, 1, 0))


def test_verbatim_homotopy_fails():
    v = homotopy_check(2, bound=(1, 1, 1), variant="verbatim")
    assert not v and v.details["failures"] > 0


def test_collapsed_d0_vanishes():
    mats = collapsed_complex(2)
    assert mats[1].cols == {}


@pytest.mark.parametrize("q", [2, 3, 5])
def test_collapsed_tor(q):
    # Euler characteristic of ranks (1, 3, 3, 1) is 0, so (1, 0, 0, 0) is impossible
    assert euler_characteristic(q) == 0
    assert collapsed_tor(q, 5).dims == {0: 1, 1: 0, 2: 0, 3: 1, 4: 0, 5: 0}


def test_verbatim_tor():
    assert collapsed_tor(2, 4, "verbatim").dims == {0: 1, 1: 2, 2: 2, 3: 1, 4: 0}


def test_hc_inference_on_point_input():
    out = hc_inference({0: 1, 1: 0, 2: 0, 3: 0})
    assert out["HC"] == {0: 1, 1: 0, 2: 1, 3: 0}
    assert len(out["inference"]) == 4


def test_hc_inference_refuses():
    with pytest.raises(PreconditionNotMet):
        hc_inference({0: 0, 1: 1, 2: 0})
    with pytest.raises(PreconditionNotMet):
        hc_inference(collapsed_tor(2, 4))
