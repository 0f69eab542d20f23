"""
Independent dense oracle for Hochschild and cyclic homology of small
algebras, written directly from structure constants with sympy matrices.
Shares no code with the package beyond reading ``A.dim``, ``A.mult``.
"""

from itertools import product

import sympy


def _mul(A, i, j):
    return A.mult.get((i, j), {})


def _basis(d, n):
    return list(product(range(d), repeat=n + 1))


def hochschild_b(A, n):
    """b: A^{(x)(n+1)} -> A^{(x)n} as a dense sympy matrix."""
    d = A.dim
    src, tgt = _basis(d, n), _basis(d, n - 1)
    pos = {t: k for k, t in enumerate(tgt)}
    M = sympy.zeros(len(tgt), len(src))
    for col, t in enumerate(src):
        for i in range(n):
            for k, c in _mul(A, t[i], t[i + 1]).items():
                M[pos[t[:i] + (k,) + t[i + 2:]], col] += (-1) ** i * sympy.Rational(c)
        for k, c in _mul(A, t[n], t[0]).items():
            M[pos[(k,) + t[1:n]], col] += (-1) ** n * sympy.Rational(c)
    return M


def signed_rotation(A, n):
    """t(a0 .. an) = (-1)^n (an, a0, .., a_{n-1})."""
    src = _basis(A.dim, n)
    pos = {t: k for k, t in enumerate(src)}
    M = sympy.zeros(len(src), len(src))
    for col, t in enumerate(src):
        M[pos[(t[n],) + t[:n]], col] = (-1) ** n
    return M


def _rank(M):
    if M.rows == 0 or M.cols == 0:
        return 0
    return M.rank()


def hochschild_dims(A, max_n):
    d = A.dim
    out = {}
    for n in range(max_n + 1):
        dim = d ** (n + 1)
        r_out = _rank(hochschild_b(A, n)) if n else 0
        r_in = _rank(hochschild_b(A, n + 1))
        out[n] = dim - r_out - r_in
    return out


def cyclic_dims(A, max_n):
    """Dims of the homology of Connes' complex C_n / (1 - t)."""
    d = A.dim

    def rel(n):
        return sympy.eye(d ** (n + 1)) - signed_rotation(A, n)

    def bar_rank(n):
        # rank of b_n induced on the quotients C_n/(1-t) -> C_{n-1}/(1-t)
        if n == 0:
            return 0
        R = rel(n - 1)
        return _rank(hochschild_b(A, n).row_join(R)) - _rank(R)

    out = {}
    for n in range(max_n + 1):
        q = d ** (n + 1) - _rank(rel(n))
        out[n] = q - bar_rank(n) - bar_rank(n + 1)
    return out
