from itertools import product

import pytest
from hypothesis import given, strategies as st

from hopfhom.exactla import SparseMatrix, rank, vclean
from hopfhom.hopfcore import (group_algebra, function_algebra, sweedler_h4, dual_hopf, cyclic_group,
                              symmetric_group, direct_product, validate_hopf, validate_algebra,
                              matrix_algebra, truncated_polynomial, tensor_algebra, find_characters,
                              find_grouplikes, find_haar_integral, integral_space, twisted_antipode,
                              hat_antipode, is_modular_pair_in_involution, modular_pair_report,
                              counit_character, unit_grouplike, is_character, HopfAlgebra)

Z2, Z3, S3 = cyclic_group(2), cyclic_group(3), symmetric_group(3)
BUILTINS = [group_algebra(Z2), group_algebra(Z3), group_algebra(S3),
            function_algebra(Z2), function_algebra(S3), sweedler_h4()]


@pytest.mark.parametrize("H", BUILTINS, ids=lambda H: H.name)
def test_builtins_validate(H):
    assert validate_hopf(H) == []
    assert rank(H.antipode_matrix()) == H.dim


def test_group_algebra_z2_antipode_is_identity():
    H = group_algebra(Z2)
    assert H.dim == 2
    assert H.antipode_matrix() == SparseMatrix.identity(2)


@pytest.mark.parametrize("G", [Z2, Z3, S3], ids=lambda G: G.name)
def test_antipode_squares_to_identity_on_group_algebras(G):
    S = group_algebra(G).antipode_matrix()
    assert S @ S == SparseMatrix.identity(G.order)


def test_h4_structure():
    H = sweedler_h4()
    one, g, x, gx = ({i: 1} for i in range(4))
    assert H.mul(g, g) == one
    assert H.mul(x, x) == {}
    assert H.mul(x, g) == vclean({3: -1})
    assert H.delta(x) == {(2, 0): 1, (1, 2): 1}
    S = H.antipode_matrix()
    assert H.S(x) == {3: -1}
    assert (S @ S).apply(x) == {2: -1}


def test_function_algebra_commutative_and_s3_noncocommutative():
    assert function_algebra(Z2).is_commutative()
    assert function_algebra(S3).is_commutative()
    assert not function_algebra(S3).is_cocommutative()
    assert function_algebra(Z3).is_cocommutative()


def _same_structure(A, B, perm):
    """A and B agree after relabelling basis index i of A as perm[i] of B."""
    def mv(v):
        return {perm[i]: c for i, c in v.items()}
    for i, j in product(range(A.dim), repeat=2):
        if mv(A.mul_basis(i, j)) != B.mul_basis(perm[i], perm[j]):
            return False
    for i in range(A.dim):
        if {(perm[a], perm[b]): c for (a, b), c in A.comult[i].items()} != B.comult[perm[i]]:
            return False
        if mv(A.antipode[i]) != B.antipode[perm[i]] or A.counit[i] != B.counit[perm[i]]:
            return False
    return mv(A.unit) == B.unit


@pytest.mark.parametrize("G", [Z2, Z3, S3], ids=lambda G: G.name)
def test_dual_of_group_algebra_is_function_algebra(G):
    assert _same_structure(dual_hopf(group_algebra(G)), function_algebra(G), list(range(G.order)))


@pytest.mark.parametrize("H", BUILTINS, ids=lambda H: H.name)
def test_double_dual_is_original(H):
    assert _same_structure(dual_hopf(dual_hopf(H)), H, list(range(H.dim)))
    assert validate_hopf(dual_hopf(H)) == []


def test_characters_and_grouplikes_of_z2():
    H = group_algebra(Z2)
    assert sorted(map(list, find_characters(H))) == [[1, -1], [1, 1]]
    assert sorted(find_grouplikes(H), key=sorted) == [{0: 1}, {1: 1}]


def test_grouplikes_of_z3_and_function_algebra():
    assert len(find_grouplikes(group_algebra(Z3))) == 3
    # only eps is rational for Z3
    assert find_characters(group_algebra(Z3)) == [[1, 1, 1]]
    # grouplikes of k^G are the characters of G: two for S3 over Q
    assert len(find_grouplikes(function_algebra(S3))) == 2
    # characters of k^G are the evaluations at elements
    assert len(find_characters(function_algebra(S3))) == 6


def test_h4_characters_and_grouplikes():
    H = sweedler_h4()
    assert sorted(map(list, find_characters(H))) == [[1, -1, 0, 0], [1, 1, 0, 0]]
    assert sorted(find_grouplikes(H), key=sorted) == [{0: 1}, {1: 1}]


@pytest.mark.parametrize("G", [Z2, Z3, S3], ids=lambda G: G.name)
def test_haar_integral_of_group_algebra_is_point_evaluation(G):
    f = find_haar_integral(group_algebra(G))
    assert f == [1 if g == G.identity else 0 for g in range(G.order)]


@pytest.mark.parametrize("G", [Z2, S3], ids=lambda G: G.name)
def test_haar_integral_of_function_algebra_is_average(G):
    from fractions import Fraction
    assert find_haar_integral(function_algebra(G)) == [Fraction(1, G.order)] * G.order


def test_h4_has_integrals_but_none_normalized():
    # left integrals on H4 are spanned by a functional that kills 1
    H = sweedler_h4()
    assert integral_space(H).dim == 1
    assert find_haar_integral(H) is None


def test_twisted_antipode():
    H = group_algebra(S3)
    eps = counit_character(H)
    assert twisted_antipode(H, eps) == [H.antipode[i] for i in range(H.dim)]
    sign = next(c for c in find_characters(H) if c != eps)
    St = twisted_antipode(H, sign)
    for g in range(6):
        assert St[g] == {S3.inv[g]: sign[g]}


def test_modular_pairs_of_h4():
    H = sweedler_h4()
    eps, sign = [1, 1, 0, 0], [1, -1, 0, 0]
    one, g = {0: 1}, {1: 1}
    for kind in ("cm", "kr"):
        assert not is_modular_pair_in_involution(H, eps, one, kind)
        assert is_modular_pair_in_involution(H, eps, g, kind)
        assert is_modular_pair_in_involution(H, sign, one, kind)
        ok, why = modular_pair_report(H, sign, g, kind)
        assert not ok and "delta(sigma)" in why


@pytest.mark.parametrize("H", BUILTINS[:3], ids=lambda H: H.name)
def test_eps_one_is_involutive_on_group_algebras(H):
    for kind in ("cm", "kr"):
        assert is_modular_pair_in_involution(H, counit_character(H), unit_grouplike(H), kind)


def test_validators_catch_broken_structures():
    H = group_algebra(Z2)
    bad = HopfAlgebra(2, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {1: 1}},
                      {0: 1}, H.comult, H.counit, H.antipode)
    # g^2 = g keeps the bialgebra axioms but leaves no antipode
    assert {a for a, _ in validate_hopf(bad)} == {"antipode left"}
    broken = HopfAlgebra(2, H.mult, {0: 1}, [{(0, 0): 1}, {(1, 0): 1}], H.counit, H.antipode)
    assert "coassociativity" not in {a for a, _ in validate_hopf(broken)}
    assert "counit" in {a for a, _ in validate_hopf(broken)}
    A = truncated_polynomial(2)
    A.mult[(1, 1)] = {0: 1}
    assert validate_algebra(A) == []  # k[x]/(x^2 - 1) is still associative
    A.mult[(1, 0)] = {0: 1}
    assert validate_algebra(A)


def test_matrix_and_tensor_algebras():
    assert validate_algebra(matrix_algebra(3)) == []
    T = tensor_algebra(truncated_polynomial(2), matrix_algebra(2))
    assert T.dim == 8 and validate_algebra(T) == []


def test_direct_product_group():
    G = direct_product(Z2, Z2)
    assert G.order == 4 and G.is_abelian()
    assert all(G.mul(g, g) == G.identity for g in range(4))


# ---------------------------------------------------------------------------
# properties

coeff = st.integers(-3, 3)


def elements(H):
    return st.lists(coeff, min_size=H.dim, max_size=H.dim).map(
        lambda xs: vclean({i: x for i, x in enumerate(xs)}))


@pytest.mark.parametrize("H", BUILTINS, ids=lambda H: H.name)
def test_counit_and_coproduct_multiplicative(H):
    @given(elements(H), elements(H))
    def run(u, v):
        assert H.eps(H.mul(u, v)) == H.eps(u) * H.eps(v)
        assert H.delta(H.mul(u, v)) == H.tensor_mul(H.delta(u), H.delta(v))
    run()


@pytest.mark.parametrize("H", BUILTINS, ids=lambda H: H.name)
def test_antipode_antimultiplicative(H):
    @given(elements(H), elements(H))
    def run(u, v):
        assert H.S(H.mul(u, v)) == H.mul(H.S(v), H.S(u))
    run()


@pytest.mark.parametrize("H", BUILTINS, ids=lambda H: H.name)
def test_found_characters_are_characters(H):
    for chi in find_characters(H):
        assert is_character(H, chi)
