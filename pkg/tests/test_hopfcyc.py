import pytest
from hypothesis import given, strategies as st

from hopfhom.exactla import SparseMatrix
from hopfhom.hopfcore import (NotInvolutive, group_algebra, function_algebra, sweedler_h4, cyclic_group,
                              symmetric_group, direct_product, matrix_algebra, truncated_polynomial,
                              counit_character, unit_grouplike, find_characters)
from hopfhom.cyclicfw import check_cyclic_axioms, hochschild_coeff_complex, character_bimodule
from hopfhom.homengine import cyclic_homology, hochschild_homology, periodic_estimate
from hopfhom.verdict import PreconditionError
from hopfhom.hopfcyc import (cm_cocyclic, kr_cyclic, kr_matches_hochschild, cocommutative_decomposition_check,
                             commutative_decomposition_check, haar_hp_check, ModuleAlgebraAction,
                             trivial_action, regular_coaction, InvariantTrace, characteristic_map_cm,
                             characteristic_map_kr, TraceNotInvariant, connes_2cocycle, inner_derivation,
                             NotDerivation, NotInvariantTrace, group_cocycle_to_cyclic,
                             group_cochain_coboundary, NotACocycle, NotCommutative)
from hopfhom.smash import sign_action

Z2, Z3, S3 = cyclic_group(2), cyclic_group(3), symmetric_group(3)
V4 = direct_product(Z2, Z2)


def eps1(H):
    return counit_character(H), unit_grouplike(H)


@pytest.mark.parametrize("H", [group_algebra(Z2), group_algebra(Z3), group_algebra(S3),
                               function_algebra(Z2), function_algebra(S3)], ids=lambda H: H.name)
def test_cm_and_kr_axioms(H):
    d, s = eps1(H)
    n = 4 if H.dim <= 3 else 3
    assert check_cyclic_axioms(cm_cocyclic(H, d, s), n) == []
    assert check_cyclic_axioms(kr_cyclic(H, d, s), n) == []


def test_cm_cyclic_operator_order():
    H = sweedler_h4()
    M = cm_cocyclic(H, [1, 1, 0, 0], {1: 1})
    for n in range(4):
        assert M.cyclic(n) ** (n + 1) == SparseMatrix.identity(M.dim(n))


def test_degree_zero_is_ground_field():
    H = group_algebra(S3)
    assert cm_cocyclic(H, *eps1(H)).dim(0) == 1
    assert kr_cyclic(H, *eps1(H)).dim(0) == 1


def test_h4_eps_one_rejected_and_tau_axioms_fail_without_check():
    H = sweedler_h4()
    with pytest.raises(NotInvolutive):
        cm_cocyclic(H, *eps1(H))
    with pytest.raises(NotInvolutive):
        kr_cyclic(H, *eps1(H))
    fails = check_cyclic_axioms(kr_cyclic(H, *eps1(H), check=False), 3)
    assert fails and any("cyclic" in f["relation"] for f in fails)


@pytest.mark.parametrize("H", [group_algebra(Z3), group_algebra(S3), sweedler_h4()], ids=lambda H: H.name)
def test_kr_simplicial_part_is_hochschild_complex(H):
    chars = find_characters(H)
    for d in chars:
        assert kr_matches_hochschild(H, d, 3)


def test_haar_triviality_hp_pattern():
    for G in (Z2, Z3, S3):
        H = group_algebra(G)
        hc = cyclic_homology(cm_cocyclic(H, *eps1(H)), 4)
        assert hc.as_list() == [1, 0, 1, 0, 1]
        assert periodic_estimate(hc).dims == {0: 1, 1: 0}
        assert haar_hp_check(H, 4)


def test_haar_check_needs_integral():
    with pytest.raises(PreconditionError):
        haar_hp_check(sweedler_h4())


@pytest.mark.parametrize("G,delta,want", [
    (Z2, None, {0: 1, 1: 0, 2: 1, 3: 0, 4: 1}),
    (Z2, [1, -1], {0: 0, 1: 0, 2: 0, 3: 0, 4: 0}),
    (Z3, None, {0: 1, 1: 0, 2: 1, 3: 0, 4: 1}),
    (S3, None, {0: 1, 1: 0, 2: 1, 3: 0}),
])
def test_cocommutative_decomposition(G, delta, want):
    if delta is None and G is S3:
        v = cocommutative_decomposition_check(G, None, 3)
    elif G is S3:
        v = cocommutative_decomposition_check(G, delta, 3)
    else:
        v = cocommutative_decomposition_check(G, delta, 4)
    assert v and v.details["left"] == want == v.details["right"]
    assert v.details["bar"] == v.details["group_homology"]


def test_cocommutative_decomposition_s3_sign():
    H = group_algebra(S3)
    sign = next(c for c in find_characters(H) if c != counit_character(H))
    v = cocommutative_decomposition_check(H, sign, 3)
    assert v and v.details["left"] == {0: 0, 1: 0, 2: 0, 3: 0}


def test_cocommutative_needs_cocommutative():
    with pytest.raises(PreconditionError):
        cocommutative_decomposition_check(function_algebra(S3))


@pytest.mark.parametrize("G", [Z2, S3], ids=lambda G: G.name)
def test_commutative_decomposition(G):
    v = commutative_decomposition_check(function_algebra(G), 4 if G is Z2 else 3)
    assert v, v.witness
    assert v.details["left"] == v.details["right"]


def test_commutative_decomposition_rejects_noncommutative():
    with pytest.raises(NotCommutative):
        commutative_decomposition_check(group_algebra(S3))


# ---------------------------------------------------------------------------
# characteristic maps

def test_cm_characteristic_map_sign_action():
    act = sign_action()
    H = act.hopf
    gamma, v = characteristic_map_cm(act, InvariantTrace([1, 0]), *eps1(H), max_n=3)
    assert v, v.witness
    assert gamma[2].ncols == H.dim ** 2


def test_cm_characteristic_map_trivial_action():
    H = group_algebra(Z3)
    A = matrix_algebra(2)
    tr = [1, 0, 0, 1]
    _, v = characteristic_map_cm(trivial_action(H, A), InvariantTrace(tr), *eps1(H), max_n=2)
    assert v


def test_cm_characteristic_map_broken_trace():
    act = sign_action()
    with pytest.raises(TraceNotInvariant):
        characteristic_map_cm(act, InvariantTrace([1, 1]), *eps1(act.hopf))
    _, v = characteristic_map_cm(act, InvariantTrace([1, 1]), *eps1(act.hopf), max_n=3, strict=False)
    assert v.details["trace_violations"]


@pytest.mark.parametrize("G", [Z2, S3], ids=lambda G: G.name)
def test_kr_characteristic_map_group(G):
    H = group_algebra(G)
    tr = [1 if g == G.identity else 0 for g in range(G.order)]
    _, v = characteristic_map_kr(regular_coaction(H), InvariantTrace(tr, "kr"), *eps1(H), max_n=3)
    assert v, v.witness


def test_kr_characteristic_map_wrong_sigma():
    H = group_algebra(S3)
    tr = [1, 0, 0, 0, 0, 0]
    with pytest.raises(TraceNotInvariant):
        characteristic_map_kr(regular_coaction(H), InvariantTrace(tr, "kr"), counit_character(H), {1: 1})


# ---------------------------------------------------------------------------
# classical cocycles

def test_connes_cocycle_on_m3():
    A = matrix_algebra(3)
    u = {0: 1, 4: 2, 8: 3}
    v = {0: 1, 4: 4, 8: 9}
    tr = [1, 0, 0, 0, 1, 0, 0, 0, 1]
    phi, verdict = connes_2cocycle(A, inner_derivation(A, u), inner_derivation(A, v), tr)
    assert verdict, verdict.witness
    assert phi


def test_connes_cocycle_equal_derivations_vanish():
    A = matrix_algebra(3)
    D = inner_derivation(A, {0: 1, 4: 2, 8: 3})
    phi, verdict = connes_2cocycle(A, D, D, [1, 0, 0, 0, 1, 0, 0, 0, 1])
    assert phi == {} and verdict


def test_connes_cocycle_preconditions():
    A = matrix_algebra(3)
    tr = [1, 0, 0, 0, 1, 0, 0, 0, 1]
    d1 = inner_derivation(A, {0: 1})
    d2 = inner_derivation(A, {1: 1})
    with pytest.raises(PreconditionError):
        connes_2cocycle(A, d1, d2, tr)
    with pytest.raises(NotDerivation):
        connes_2cocycle(A, SparseMatrix.identity(9), d1, tr)
    with pytest.raises(NotInvariantTrace):
        connes_2cocycle(A, d1, d1, [1] * 9)


def test_group_cocycle_degree_zero_is_trace():
    phi, v = group_cocycle_to_cyclic(Z2, {(): 1}, 0)
    assert phi == {0: 1} and v


@pytest.mark.parametrize("G", [Z3, cyclic_group(4), S3], ids=lambda G: G.name)
def test_odd_coboundary_gives_cyclic_cocycle(G):
    f = {(g,): g - G.inv[g] for g in range(G.order) if g != G.inv[g]}
    c = group_cochain_coboundary(G, f, 1)
    assert c
    _, v = group_cocycle_to_cyclic(G, c, 2)
    assert v, v.witness


def test_coboundary_on_klein_group_is_not_cyclic():
    # every element of Z2 x Z2 is an involution, so no nonzero coboundary is cyclic
    c = group_cochain_coboundary(V4, {(1,): 1, (2,): 2, (3,): 3}, 1)
    _, v = group_cocycle_to_cyclic(V4, c, 2)
    assert v.details["hochschild"]
    assert not v.details["cyclic"]
    assert v.witness["condition"] == "phi lambda = phi"


def test_group_cocycle_rejects_non_cocycles():
    with pytest.raises(NotACocycle):
        group_cocycle_to_cyclic(Z3, {(1, 1): 1}, 2)
    with pytest.raises(NotACocycle):
        group_cocycle_to_cyclic(Z2, {(0, 1): 1}, 2)


@given(st.lists(st.integers(-3, 3), min_size=2, max_size=2))
def test_coboundaries_are_cocycles(vals):
    f = {(g,): x for g, x in zip((1, 2), vals) if x}
    assert group_cochain_coboundary(Z3, group_cochain_coboundary(Z3, f, 1), 2) == {}
