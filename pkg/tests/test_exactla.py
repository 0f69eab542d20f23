from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from hopfhom.exactla import (SparseMatrix, rank, kernel, image, solve, quotient_dim, on_quotient,
                             kron, qq, fmt_scalar, bareiss_rank, Subspace, Inconsistent)

entries = st.integers(-3, 3) | st.fractions(min_value=-2, max_value=2, max_denominator=4)


@st.composite
def matrices(draw, max_rows=7, max_cols=7):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    # sparse-ish: most entries zero
    rows = [[draw(st.sampled_from([0, 0, 0]) | entries) for _ in range(c)] for _ in range(r)]
    return rows


def as_sympy(rows):
    return sympy.Matrix([[sympy.Rational(Fraction(x)) for x in row] for row in rows])


@given(matrices())
def test_rank_matches_sympy(rows):
    assert rank(SparseMatrix.from_dense(rows)) == as_sympy(rows).rank()


@given(matrices())
def test_dense_bareiss_matches_sparse(rows):
    assert bareiss_rank(rows) == rank(SparseMatrix.from_dense(rows))


@given(matrices())
def test_rank_of_transpose(rows):
    m = SparseMatrix.from_dense(rows)
    assert rank(m) == rank(m.transpose())


@given(matrices())
def test_kernel_is_kernel(rows):
    m = SparseMatrix.from_dense(rows)
    K = kernel(m)
    assert K.dim == m.ncols - rank(m)
    for v in K.vectors():
        assert not m.apply(v)


@given(matrices(), st.lists(entries, min_size=7, max_size=7))
def test_solve_consistent_systems(rows, xs):
    m = SparseMatrix.from_dense(rows)
    x0 = {j: qq(Fraction(x)) for j, x in enumerate(xs[:m.ncols]) if x}
    b = m.apply(x0)
    x = solve(m, b)
    assert m.apply(x) == b


def test_solve_inconsistent():
    m = SparseMatrix.from_dense([[1, 0], [0, 0]])
    with pytest.raises(Inconsistent):
        solve(m, {1: 1})


@given(matrices(), matrices())
def test_rank_of_kron_is_product(a, b):
    A, B = SparseMatrix.from_dense(a), SparseMatrix.from_dense(b)
    assert rank(kron(A, B)) == rank(A) * rank(B)


def test_quotient_dim_and_containment():
    V = Subspace.span(4, [{0: 1}, {1: 1}, {2: 1}])
    W = Subspace.span(4, [{0: 1, 1: 1}])
    assert quotient_dim(W, V) == 2
    with pytest.raises(Inconsistent):
        quotient_dim(Subspace.span(4, [{3: 1}]), V)


def test_on_quotient_descends_and_rejects():
    # projection killing e0 descends modulo span(e0)
    W = Subspace.span(3, [{0: 1}])
    P = SparseMatrix.from_dense([[0, 0, 0], [0, 1, 0], [0, 0, 1]])
    Q = on_quotient(P, W, W)
    assert (Q.nrows, Q.ncols) == (2, 2) and rank(Q) == 2
    swap = SparseMatrix.from_dense([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    with pytest.raises(Inconsistent):
        on_quotient(swap, W, W)


def test_image_span():
    m = SparseMatrix.from_dense([[1, 2], [2, 4]])
    assert image(m).dim == 1


def test_scalars_round_trip():
    assert qq("3/6") == Fraction(1, 2)
    assert qq("4/2") == 2 and type(qq("4/2")) is int
    assert fmt_scalar(Fraction(-3, 4)) == "-3/4"
    with pytest.raises(TypeError):
        qq(0.5)


@given(matrices(5, 5), matrices(5, 5))
def test_matmul_matches_sympy(a, b):
    A = SparseMatrix.from_dense(a)
    brows = [[b[i % len(b)][j % len(b[0])] for j in range(3)] for i in range(A.ncols)]
    ref = as_sympy(a) * as_sympy(brows)
    ref = [[Fraction(int(x.p), int(x.q)) for x in row] for row in ref.tolist()]
    assert A @ SparseMatrix.from_dense(brows) == SparseMatrix.from_dense(ref)


def test_number_field_arithmetic_and_rank():
    from hopfhom.exactla import NumberField
    K = NumberField([-2, 0, 1])
    t = K.gen
    assert t * t == 2
    assert (1 + t) * (1 / (1 + t)) == 1
    assert rank(SparseMatrix.from_dense([[1, t], [t, 2]])) == 1
    assert rank(SparseMatrix.from_dense([[1, t], [t, 3]])) == 2


def test_reducible_modulus_detected_on_division():
    from hopfhom.exactla import NumberField, NotAField
    u = NumberField([-1, 0, 1]).gen
    with pytest.raises(NotAField):
        1 / (u - 1)
