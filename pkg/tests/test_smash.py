import pytest
from hypothesis import given, strategies as st

from hopfhom.exactla import SparseMatrix
from hopfhom.hopfcore import (group_algebra, cyclic_group, truncated_polynomial, matrix_algebra,
                              tensor_algebra, validate_algebra)
from hopfhom.cyclicfw import check_cylindrical, check_cyclic_axioms, algebra_cyclic_module
from hopfhom.homengine import cyclic_homology, hochschild_homology
from hopfhom.hopfcyc import trivial_action
from hopfhom.invariant import trivial_hopf
from hopfhom.smash import (sign_action, h4_action, translation_action, smash_product, cylindrical_smash,
                           phi_psi_isomorphism, ez_dimension_compare, coinvariant_row, averaged_row_rank,
                           row_relations, beta_gamma_check, beta_intertwines, spectral_sequence)

Z2 = cyclic_group(2)
A2 = truncated_polynomial(2)


def trivial_z2():
    return trivial_action(group_algebra(Z2), A2)


def point_action():
    return trivial_action(trivial_hopf(), A2)


ACTIONS = {"sign": sign_action, "h4": h4_action, "trivial": trivial_z2, "point": point_action}


def test_sign_smash_product_is_associative():
    S = smash_product(sign_action())
    assert S.dim == 4
    assert validate_algebra(S) == []


def test_trivial_action_gives_tensor_product():
    S = smash_product(trivial_z2())
    T = tensor_algebra(A2, group_algebra(Z2))
    assert S.mult == T.mult and S.unit == T.unit


def test_translation_action_gives_matrix_algebra():
    # k^G # kG is the crossed product, isomorphic to M_|G|
    S = smash_product(translation_action(cyclic_group(3)))
    assert validate_algebra(S) == []
    M3 = matrix_algebra(3)
    assert hochschild_homology(algebra_cyclic_module(S), 2).dims == \
        hochschild_homology(algebra_cyclic_module(M3), 2).dims == {0: 1, 1: 0, 2: 0}


@given(st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_h4_smash_associative_on_basis(idx):
    S = smash_product(h4_action())
    a, b, c = ({i: 1} for i in idx)
    assert S.mul(S.mul(a, b), c) == S.mul(a, S.mul(b, c))


@pytest.mark.parametrize("name", ["sign", "h4", "point"])
def test_cylindrical_axioms(name):
    X = cylindrical_smash(ACTIONS[name]())
    assert check_cylindrical(X, 2) == []


def test_cylindrical_order_relation():
    X = cylindrical_smash(sign_action())
    for p in range(3):
        for q in range(3):
            tau, t = X.hcyc(p, q), X.vcyc(p, q)
            assert (tau ** (p + 1)) @ (t ** (q + 1)) == SparseMatrix.identity(X.dim(p, q))


def test_point_column_is_the_algebra_module():
    X = cylindrical_smash(point_action())
    col, A = X.column(0), algebra_cyclic_module(A2)
    for n in range(3):
        assert col.cyclic(n) == A.cyclic(n)
        for i in range(n + 1):
            if n:
                assert col.face(n, i) == A.face(n, i)


@pytest.mark.parametrize("name", ["sign", "h4", "trivial"])
def test_diagonal_is_cyclic(name):
    assert check_cyclic_axioms(cylindrical_smash(ACTIONS[name]()).diagonal(), 2) == []


@pytest.mark.parametrize("name", ["sign", "trivial", "point", "h4"])
def test_phi_psi(name):
    assert phi_psi_isomorphism(ACTIONS[name](), 2 if name == "h4" else 3)


def test_phi_with_antipode_instead_of_inverse_fails():
    act = h4_action()
    H = act.hopf
    wrong = [H.antipode[i] for i in range(H.dim)]
    v = phi_psi_isomorphism(act, 2, sinv=wrong)
    assert not v and v.witness


@pytest.mark.parametrize("name,n", [("sign", 3), ("trivial", 2), ("point", 3)])
def test_tot_matches_smash(name, n):
    v = ez_dimension_compare(ACTIONS[name](), n)
    assert v, v.witness
    if name == "point":
        assert v.details["smash"] == cyclic_homology(algebra_cyclic_module(A2), n).dims
    if name == "trivial":
        AH = tensor_algebra(A2, group_algebra(Z2))
        assert v.details["tot"] == cyclic_homology(algebra_cyclic_module(AH), n).dims


def test_sign_smash_cyclic_homology():
    # frozen from the dense sympy oracle in tests/oracle.py (HH = 2, 1, 1, 1)
    v = ez_dimension_compare(sign_action(), 3)
    assert v.details["smash"] == v.details["tot"] == {0: 2, 1: 1, 2: 2, 3: 1}
    assert hochschild_homology(algebra_cyclic_module(smash_product(sign_action())), 3).dims == \
        {0: 2, 1: 1, 2: 1, 3: 1}


@pytest.mark.parametrize("name", ["sign", "trivial"])
def test_coinvariant_row(name):
    act = ACTIONS[name]()
    M = coinvariant_row(act)
    assert check_cyclic_axioms(M, 3) == []
    for n in range(3):
        assert M.dim(n) == averaged_row_rank(act, n)


def test_coinvariant_row_point_is_algebra():
    M = coinvariant_row(point_action())
    assert [M.dim(n) for n in range(3)] == [2, 4, 8]
    assert row_relations(point_action(), 1).dim == 0
    assert cyclic_homology(M, 2).dims == cyclic_homology(algebra_cyclic_module(A2), 2).dims


@pytest.mark.parametrize("name", ["sign", "h4", "trivial"])
def test_beta_gamma(name):
    assert beta_gamma_check(ACTIONS[name](), 2, 2)
    assert beta_intertwines(ACTIONS[name](), 2, 1)


def test_spectral_sequence_sign():
    v = spectral_sequence(sign_action(), 2)
    assert v, v.witness
    for n, hc in v.details["HC"].items():
        assert v.details["E2_total"][n] >= hc == v.details["Einf_total"][n]


def test_spectral_sequence_trivial_column_zero():
    act = trivial_z2()
    v = spectral_sequence(act, 2)
    assert v, v.witness
    # column p = 0 of E1 carries the coinvariant row with b + uB; after d1 it is its HC
    hc_row = cyclic_homology(coinvariant_row(act), 2).dims
    e1, e2 = v.details["pages"][1], v.details["pages"][2]
    assert [e1[(n, n)] for n in range(3)] == [4, 4, 8]
    assert [e2[(n, n)] for n in range(3)] == [hc_row[n] for n in range(3)] == [4, 0, 4]


def test_spectral_sequence_point_degenerates():
    v = spectral_sequence(point_action(), 2)
    assert v
    assert v.details["E2_total"] == v.details["HC"] == cyclic_homology(algebra_cyclic_module(A2), 2).dims
