import pytest

from hopfhom.exactla import SparseMatrix
from hopfhom.hopfcore import (group_algebra, function_algebra, sweedler_h4, cyclic_group, symmetric_group,
                              truncated_polynomial, matrix_algebra, counit_character, unit_grouplike)
from hopfhom.cyclicfw import check_cyclic_axioms, algebra_cyclic_module, coalgebra_cocyclic_module
from hopfhom.homengine import cyclic_homology
from hopfhom.hopfcyc import kr_cyclic, cm_cocyclic
from hopfhom.invariant import (regular_triple, trivial_triple, coinvariant_subcomplex, coinvariants,
                               averaging_rank, triple_paracyclic, coaction_antipode_identity_check,
                               kr_identification_check, morita_compare, NotMatchedInInvolution,
                               regular_cotriple, trivial_cotriple, cotriple_cocyclic, cotriple_paracocyclic,
                               cm_identification_check, NotComatchedInInvolution)

Z2, S3 = cyclic_group(2), symmetric_group(3)
H4 = sweedler_h4()
H4_PAIRS = [([1, 1, 0, 0], {1: 1}), ([1, -1, 0, 0], {0: 1})]


def cases():
    out = []
    for H in (group_algebra(Z2), group_algebra(S3), function_algebra(Z2)):
        out.append((H, counit_character(H), unit_grouplike(H)))
    for d, s in H4_PAIRS:
        out.append((H4, d, s))
    return out


CASES = cases()
IDS = ["%s-%d" % (H.name, k) for k, (H, _, _) in enumerate(CASES)]


@pytest.mark.parametrize("H,d,s", CASES, ids=IDS)
def test_regular_triple_coinvariants(H, d, s):
    T = regular_triple(H, d, s)
    assert T.involution_report() == (True, "")
    assert coaction_antipode_identity_check(T)
    X = coinvariant_subcomplex(T)
    n = 3 if H.dim <= 2 else 2
    for k in range(n + 1):
        assert X.dim(k) == H.dim ** k
    assert check_cyclic_axioms(X, n) == []


@pytest.mark.parametrize("H,d,s", CASES, ids=IDS)
def test_triple_matches_kr(H, d, s):
    assert kr_identification_check(H, d, s, 2 if H.dim > 2 else 3)


def test_triple_and_kr_cyclic_homology_agree():
    H = group_algebra(S3)
    d, s = counit_character(H), unit_grouplike(H)
    a = cyclic_homology(coinvariant_subcomplex(regular_triple(H, d, s)), 2).dims
    b = cyclic_homology(kr_cyclic(H, d, s), 2).dims
    assert a == b == {0: 1, 1: 0, 2: 1}


def test_averaging_rank_matches_coinvariants():
    H = group_algebra(S3)
    T = regular_triple(H, counit_character(H), unit_grouplike(H))
    for n in range(3):
        assert averaging_rank(T, n) == coinvariants(T, n).dim
    assert averaging_rank(regular_triple(H4, *H4_PAIRS[0]), 1) is None


def test_unmatched_pairs_rejected():
    with pytest.raises(NotMatchedInInvolution, match="square"):
        coinvariant_subcomplex(regular_triple(H4, [1, 1, 0, 0], {0: 1}))
    with pytest.raises(NotMatchedInInvolution, match="trivially"):
        coinvariant_subcomplex(regular_triple(H4, [1, -1, 0, 0], {1: 1}))


def test_paracyclic_module_is_not_cyclic_before_restriction():
    # tau^{n+1} multiplies by delta(g0 ... gn), which is -1 for the sign character
    H = group_algebra(Z2)
    P = triple_paracyclic(regular_triple(H, [1, -1], {0: 1}))
    assert check_cyclic_axioms(P, 2, paracyclic=True) == []
    assert P.cyclic(1) ** 2 != SparseMatrix.identity(P.dim(1))
    X = coinvariant_subcomplex(regular_triple(H, [1, -1], {0: 1}))
    assert X.cyclic(1) ** 2 == SparseMatrix.identity(X.dim(1))


@pytest.mark.parametrize("A", [truncated_polynomial(2), matrix_algebra(2)], ids=lambda A: A.name)
def test_trivial_triple_is_the_algebra(A):
    X = coinvariant_subcomplex(trivial_triple(A))
    assert cyclic_homology(X, 2).dims == cyclic_homology(algebra_cyclic_module(A), 2).dims


@pytest.mark.parametrize("k", [2, 3])
def test_morita_invariance(k):
    H = group_algebra(Z2)
    v = morita_compare(regular_triple(H, counit_character(H), unit_grouplike(H)), k, 2 if k == 2 else 1)
    assert v, v.witness


def test_morita_on_h4():
    v = morita_compare(regular_triple(H4, *H4_PAIRS[1]), 2, 1)
    assert v, v.witness


# ---------------------------------------------------------------------------
# cotriples

@pytest.mark.parametrize("H,d,s", CASES, ids=IDS)
def test_regular_cotriple(H, d, s):
    ct = regular_cotriple(H, d, s)
    assert ct.involution_report() == (True, "")
    X = cotriple_cocyclic(ct)
    n = 3 if H.dim <= 2 else 2
    for k in range(n + 1):
        assert X.dim(k) == H.dim ** k
    assert check_cyclic_axioms(X, n) == []


@pytest.mark.parametrize("H,d,s", CASES, ids=IDS)
def test_cotriple_matches_cm(H, d, s):
    assert cm_identification_check(H, d, s, 2 if H.dim > 2 else 3)


def test_cotriple_and_cm_cyclic_cohomology_agree():
    H = group_algebra(S3)
    d, s = counit_character(H), unit_grouplike(H)
    a = cyclic_homology(cotriple_cocyclic(regular_cotriple(H, d, s)), 2).dims
    b = cyclic_homology(cm_cocyclic(H, d, s), 2).dims
    assert a == b


def test_uncomatched_cotriple_rejected():
    with pytest.raises(NotComatchedInInvolution):
        cotriple_cocyclic(regular_cotriple(H4, [1, 1, 0, 0], {0: 1}))


def test_trivial_cotriple_is_the_coalgebra():
    C = group_algebra(Z2)
    X = cotriple_cocyclic(trivial_cotriple(C))
    assert cyclic_homology(X, 2).dims == cyclic_homology(coalgebra_cocyclic_module(C), 2).dims
    assert check_cyclic_axioms(cotriple_paracocyclic(trivial_cotriple(C)), 2) == []
