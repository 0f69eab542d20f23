"""
Finite dimensional algebras and Hopf algebras given by structure constants.

Basis elements are integers ``0..dim-1``.  An element is a dict
``{i: coeff}``, an element of ``H^{(x)n}`` a dict ``{(i1,..,in): coeff}``.

    >>> H = group_algebra(cyclic_group(3))
    >>> validate_hopf(H)
    []
    >>> len(find_characters(H)), len(find_grouplikes(H))
    (1, 3)
"""

from fractions import Fraction
from itertools import product, permutations
from math import gcd
from functools import lru_cache

from .exactla import (SparseMatrix, Subspace, Inconsistent, kernel, solve, norm,
                      vadd, vadd_into, vclean, vscale, qq, rank)


class InvalidStructure(ValueError):
    def __init__(self, axiom, witness=None):
        ValueError.__init__(self, "%s fails (witness %r)" % (axiom, witness))
        self.axiom = axiom
        self.witness = witness


class NotInvolutive(ValueError):
    pass


# ---------------------------------------------------------------------------
# tensor helpers

def tensor_mul(mul, s, t):
    """Componentwise product of two tensors, ``mul(i, j)`` giving a dict."""
    out = {}
    for a, x in s.items():
        for b, y in t.items():
            parts = [mul(i, j) for i, j in zip(a, b)]
            if not all(parts):
                continue
            for idx in product(*[list(p.items()) for p in parts]):
                c = x * y
                key = []
                for k, v in idx:
                    key.append(k)
                    c *= v
                key = tuple(key)
                out[key] = out.get(key, 0) + c
    return vclean(out)


def tensor_apply(f, t, slot):
    """Apply a linear map ``f(i) -> dict`` to one slot of a tensor."""
    out = {}
    for key, x in t.items():
        for k, c in f(key[slot]).items():
            nk = key[:slot] + (k,) + key[slot + 1:]
            out[nk] = out.get(nk, 0) + x * c
    return vclean(out)


def tensor_product(*ts):
    """Outer product of tensors (given as dicts of tuples or of ints)."""
    out = {(): 1}
    for t in ts:
        new = {}
        for a, x in out.items():
            for b, y in t.items():
                key = a + (b if isinstance(b, tuple) else (b,))
                new[key] = new.get(key, 0) + x * y
        out = new
    return vclean(out)


# ---------------------------------------------------------------------------
# algebras

class FiniteAlgebra:
    """Unital associative algebra with structure constants ``mult[(i, j)]``."""

    def __init__(self, dim, mult, unit, labels=None, name="A"):
        self.dim = dim
        self.mult = {k: vclean(v) for k, v in mult.items() if vclean(v)}
        self.unit = vclean(unit)
        self.labels = list(labels) if labels else ["e%d" % i for i in range(dim)]
        self.name = name

    def __repr__(self):
        return "%s(dim=%d)" % (self.name, self.dim)

    def mul_basis(self, i, j):
        return self.mult.get((i, j), {})

    def mul(self, u, v):
        out = {}
        for i, x in u.items():
            for j, y in v.items():
                m = self.mult.get((i, j))
                if m:
                    vadd_into(out, m, x * y)
        return vclean(out)

    def one(self):
        return dict(self.unit)

    def basis(self, i):
        return {i: 1}

    def power(self, u, k):
        out = self.one()
        for _ in range(k):
            out = self.mul(out, u)
        return out

    def prod(self, elems):
        out = self.one()
        for e in elems:
            out = self.mul(out, e)
        return out

    def left_mult_matrix(self, u):
        return SparseMatrix.from_function(self.dim, self.dim, lambda j: self.mul(u, {j: 1}))

    def right_mult_matrix(self, u):
        return SparseMatrix.from_function(self.dim, self.dim, lambda j: self.mul({j: 1}, u))

    def is_commutative(self):
        return all(self.mul_basis(i, j) == self.mul_basis(j, i)
                   for i in range(self.dim) for j in range(i + 1, self.dim))

    def label(self, i):
        return self.labels[i]

    def element_str(self, u):
        if not u:
            return "0"
        return " + ".join("%s*%s" % (x, self.labels[i]) for i, x in sorted(u.items()))

    def tensor_mul(self, s, t):
        return tensor_mul(self.mul_basis, s, t)

    def opposite(self):
        return FiniteAlgebra(self.dim, {(j, i): v for (i, j), v in self.mult.items()},
                             self.unit, self.labels, self.name + "^op")

    def generators(self):
        """A small set of basis indices generating the algebra."""
        gens = []
        span = Subspace.span(self.dim, [self.unit])
        while span.dim < self.dim:
            best = None
            for i in range(self.dim):
                if i in gens:
                    continue
                trial = _closure(self, gens + [i])
                if best is None or trial.dim > best[1].dim:
                    best = (i, trial)
                if trial.dim == self.dim:
                    break
            gens.append(best[0])
            span = best[1]
        return gens


def _closure(alg, gens):
    """Subalgebra generated by basis elements ``gens``."""
    vecs = [alg.one()] + [{g: 1} for g in gens]
    span = Subspace.span(alg.dim, vecs)
    while True:
        new = [alg.mul({g: 1}, v) for g in gens for v in span.vectors()]
        nxt = Subspace.span(alg.dim, span.vectors() + new)
        if nxt.dim == span.dim:
            return span
        span = nxt


def validate_algebra(A):
    fails = []
    n = A.dim
    for i in range(n):
        if A.mul(A.unit, {i: 1}) != {i: 1}:
            fails.append(("left unit", i))
            break
        if A.mul({i: 1}, A.unit) != {i: 1}:
            fails.append(("right unit", i))
            break
    for i, j, k in product(range(n), repeat=3):
        if A.mul(A.mul_basis(i, j), {k: 1}) != A.mul({i: 1}, A.mul_basis(j, k)):
            fails.append(("associativity", (i, j, k)))
            break
    return fails


def matrix_algebra(n):
    """M_n(Q) with basis E_ij at index i*n + j."""
    mult = {}
    for i, j, k in product(range(n), repeat=3):
        mult[(i * n + j, j * n + k)] = {i * n + k: 1}
    unit = {i * n + i: 1 for i in range(n)}
    labels = ["E%d%d" % (i, j) for i in range(n) for j in range(n)]
    return FiniteAlgebra(n * n, mult, unit, labels, "M%d" % n)


def truncated_polynomial(n):
    """k[x]/(x^n) with basis 1, x, .., x^{n-1}."""
    mult = {(i, j): {i + j: 1} for i in range(n) for j in range(n) if i + j < n}
    labels = ["1"] + ["x" if i == 1 else "x^%d" % i for i in range(1, n)]
    return FiniteAlgebra(n, mult, {0: 1}, labels, "k[x]/(x^%d)" % n)


def tensor_algebra(A, B):
    """A (x) B with basis index a*B.dim + b."""
    mult = {}
    for (i, j), u in A.mult.items():
        for (k, l), v in B.mult.items():
            out = {}
            for a, x in u.items():
                for b, y in v.items():
                    out[a * B.dim + b] = x * y
            mult[(i * B.dim + k, j * B.dim + l)] = out
    unit = {a * B.dim + b: x * y for a, x in A.unit.items() for b, y in B.unit.items()}
    labels = ["%s|%s" % (p, q) for p in A.labels for q in B.labels]
    return FiniteAlgebra(A.dim * B.dim, mult, unit, labels, "%s(x)%s" % (A.name, B.name))


# ---------------------------------------------------------------------------
# groups

class FiniteGroup:
    def __init__(self, table, labels=None, name="G"):
        self.table = [list(r) for r in table]
        self.order = len(table)
        self.labels = list(labels) if labels else [str(i) for i in range(self.order)]
        self.name = name
        self.identity = next(e for e in range(self.order)
                             if all(self.table[e][g] == g for g in range(self.order)))
        self.inv = [next(h for h in range(self.order) if self.table[g][h] == self.identity)
                    for g in range(self.order)]

    def mul(self, g, h):
        return self.table[g][h]

    def prod(self, gs):
        out = self.identity
        for g in gs:
            out = self.table[out][g]
        return out

    def is_abelian(self):
        return all(self.table[g][h] == self.table[h][g]
                   for g in range(self.order) for h in range(self.order))

    def elements(self):
        return range(self.order)


def cyclic_group(n):
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)],
                       ["1"] + ["c%d" % i for i in range(1, n)], "Z%d" % n)


def symmetric_group(n):
    perms = list(permutations(range(n)))
    # identity first
    pos = {p: k for k, p in enumerate(perms)}
    table = [[pos[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    labels = ["".join(str(x + 1) for x in p) for p in perms]
    return FiniteGroup(table, labels, "S%d" % n)


def direct_product(G, H):
    n, m = G.order, H.order
    table = [[G.mul(a // m, b // m) * m + H.mul(a % m, b % m) for b in range(n * m)]
             for a in range(n * m)]
    labels = ["(%s,%s)" % (G.labels[a // m], H.labels[a % m]) for a in range(n * m)]
    return FiniteGroup(table, labels, "%sx%s" % (G.name, H.name))


def group_sign(G, g):
    """Sign of a permutation group element, using its label."""
    p = [int(c) - 1 for c in G.labels[g]]
    s = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


# ---------------------------------------------------------------------------
# Hopf algebras

class HopfAlgebra(FiniteAlgebra):
    """Algebra plus ``comult[i] = {(j, k): c}``, ``counit[i]``, ``antipode[i]``."""

    def __init__(self, dim, mult, unit, comult, counit, antipode, labels=None, name="H"):
        FiniteAlgebra.__init__(self, dim, mult, unit, labels, name)
        self.comult = [vclean(comult.get(i, {})) if isinstance(comult, dict) else vclean(comult[i])
                       for i in range(dim)]
        self.counit = [qq(counit.get(i, 0)) if isinstance(counit, dict) else qq(counit[i])
                       for i in range(dim)]
        self.antipode = [vclean(antipode.get(i, {})) if isinstance(antipode, dict) else vclean(antipode[i])
                         for i in range(dim)]
        self._sinv = None
        self._iter = {}

    def eps(self, u):
        return norm(sum(x * self.counit[i] for i, x in u.items()))

    def S(self, u):
        out = {}
        for i, x in u.items():
            vadd_into(out, self.antipode[i], x)
        return vclean(out)

    def S_basis(self, i):
        return self.antipode[i]

    def antipode_matrix(self):
        return SparseMatrix.from_columns(self.dim, self.antipode)

    def Sinv_basis(self, i):
        if self._sinv is None:
            m = self.antipode_matrix()
            cols = []
            for j in range(self.dim):
                try:
                    cols.append(solve(m, {j: 1}))
                except Inconsistent:
                    raise InvalidStructure("antipode invertible", j)
            self._sinv = cols
        return self._sinv[i]

    def Sinv(self, u):
        out = {}
        for i, x in u.items():
            vadd_into(out, self.Sinv_basis(i), x)
        return vclean(out)

    def delta(self, u):
        out = {}
        for i, x in u.items():
            vadd_into(out, self.comult[i], x)
        return vclean(out)

    def coproduct_n(self, i, n):
        """Iterated coproduct of e_i into n tensor legs (n >= 1)."""
        key = (i, n)
        r = self._iter.get(key)
        if r is None:
            if n == 1:
                r = {(i,): 1}
            elif n == 0:
                r = {(): self.counit[i]} if self.counit[i] else {}
            else:
                prev = self.coproduct_n(i, n - 1)
                r = {}
                for t, x in prev.items():
                    for (a, b), c in self.comult[t[-1]].items():
                        k = t[:-1] + (a, b)
                        r[k] = r.get(k, 0) + x * c
                r = vclean(r)
            self._iter[key] = r
        return r

    def coproduct_elem(self, u, n):
        out = {}
        for i, x in u.items():
            vadd_into(out, self.coproduct_n(i, n), x)
        return vclean(out)

    def is_cocommutative(self):
        return all(self.comult[i] == {(b, a): c for (a, b), c in self.comult[i].items()}
                   for i in range(self.dim))

    def check(self):
        fails = validate_hopf(self)
        if fails:
            raise InvalidStructure(*fails[0])
        return self


def validate_hopf(H):
    """List of (axiom, witness) failures; empty when H is a Hopf algebra."""
    fails = validate_algebra(H)
    n = H.dim
    for i in range(n):
        l3 = {}
        for (a, b), x in H.comult[i].items():
            for (c, d), y in H.comult[a].items():
                l3[(c, d, b)] = l3.get((c, d, b), 0) + x * y
        r3 = {}
        for (a, b), x in H.comult[i].items():
            for (c, d), y in H.comult[b].items():
                r3[(a, c, d)] = r3.get((a, c, d), 0) + x * y
        if vclean(l3) != vclean(r3):
            fails.append(("coassociativity", i))
            break
    for i in range(n):
        l = {}
        r = {}
        for (a, b), x in H.comult[i].items():
            vadd_into(l, {b: 1}, x * H.counit[a])
            vadd_into(r, {a: 1}, x * H.counit[b])
        if vclean(l) != {i: 1} or vclean(r) != {i: 1}:
            fails.append(("counit", i))
            break
    one = H.unit
    if H.delta(one) != tensor_product(one, one):
        fails.append(("comultiplication unital", None))
    if H.eps(one) != 1:
        fails.append(("counit unital", None))
    for i, j in product(range(n), repeat=2):
        lhs = H.delta(H.mul_basis(i, j))
        rhs = H.tensor_mul(H.comult[i], H.comult[j])
        if lhs != rhs:
            fails.append(("comultiplication multiplicative", (i, j)))
            break
        if H.eps(H.mul_basis(i, j)) != H.counit[i] * H.counit[j]:
            fails.append(("counit multiplicative", (i, j)))
            break
    for i in range(n):
        l = {}
        r = {}
        for (a, b), x in H.comult[i].items():
            vadd_into(l, H.mul(H.antipode[a], {b: 1}), x)
            vadd_into(r, H.mul({a: 1}, H.antipode[b]), x)
        target = vscale(H.unit, H.counit[i])
        if vclean(l) != target:
            fails.append(("antipode left", i))
            break
        if vclean(r) != target:
            fails.append(("antipode right", i))
            break
    if rank(H.antipode_matrix()) != n:
        fails.append(("antipode invertible", None))
    return fails


def group_algebra(G):
    n = G.order
    mult = {(g, h): {G.mul(g, h): 1} for g in range(n) for h in range(n)}
    comult = [{(g, g): 1} for g in range(n)]
    counit = [1] * n
    antipode = [{G.inv[g]: 1} for g in range(n)]
    H = HopfAlgebra(n, mult, {G.identity: 1}, comult, counit, antipode, G.labels, "k" + G.name)
    H.group = G
    return H


def function_algebra(G):
    n = G.order
    mult = {(g, g): {g: 1} for g in range(n)}
    comult = []
    for g in range(n):
        comult.append({(a, b): 1 for a in range(n) for b in range(n) if G.mul(a, b) == g})
    counit = [1 if g == G.identity else 0 for g in range(n)]
    antipode = [{G.inv[g]: 1} for g in range(n)]
    H = HopfAlgebra(n, mult, {g: 1 for g in range(n)}, comult, counit, antipode,
                    ["p_" + l for l in G.labels], "k^" + G.name)
    H.group = G
    return H


def sweedler_h4():
    """Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx."""
    # basis index 2*b + a  <->  g^a x^b
    mult = {}
    for a, b, c, d in product(range(2), repeat=4):
        if b + d >= 2:
            continue
        sign = -1 if (b and c) else 1
        mult[(2 * b + a, 2 * d + c)] = {2 * (b + d) + (a + c) % 2: sign}
    # reorder to 1, g, x, gx
    comult = [
        {(0, 0): 1},
        {(1, 1): 1},
        {(2, 0): 1, (1, 2): 1},
        {(3, 1): 1, (0, 3): 1},
    ]
    counit = [1, 1, 0, 0]
    antipode = [{0: 1}, {1: 1}, {3: -1}, {2: 1}]
    return HopfAlgebra(4, mult, {0: 1}, comult, counit, antipode, ["1", "g", "x", "gx"], "H4")


def dual_hopf(H):
    """Linear dual with (fg)(h) = f(h1) g(h2)."""
    n = H.dim
    mult = {}
    for k in range(n):
        for (i, j), c in H.comult[k].items():
            mult.setdefault((i, j), {})[k] = c
    unit = {i: H.counit[i] for i in range(n) if H.counit[i]}
    comult = [{} for _ in range(n)]
    for (i, j), v in H.mult.items():
        for k, c in v.items():
            comult[k][(i, j)] = c
    counit = [H.unit.get(i, 0) for i in range(n)]
    antipode = [{} for _ in range(n)]
    for i in range(n):
        for j, c in H.antipode[i].items():
            antipode[j][i] = c
    return HopfAlgebra(n, mult, unit, comult, counit, antipode,
                       ["%s*" % l for l in H.labels], H.name + "*")


# ---------------------------------------------------------------------------
# characters, grouplikes, integrals

def _rational_roots(coeffs):
    """Rational roots of a polynomial (low degree first, Fraction coeffs)."""
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    roots = []
    while c and c[0] == 0:
        c.pop(0)
        if 0 not in roots:
            roots.append(0)
    if len(c) <= 1:
        return roots
    den = 1
    for x in c:
        den = den * x.denominator // gcd(den, x.denominator)
    ic = [int(x * den) for x in c]
    a0, an = abs(ic[0]), abs(ic[-1])

    def divisors(m):
        out = []
        d = 1
        while d * d <= m:
            if m % d == 0:
                out.append(d)
                out.append(m // d)
            d += 1
        return set(out)

    for p in divisors(a0):
        for q in divisors(an):
            for s in (1, -1):
                r = Fraction(s * p, q)
                if r in roots:
                    continue
                val = 0
                for x in reversed(ic):
                    val = val * r + x
                if val == 0:
                    roots.append(norm(r))
    return sorted(roots)


def _min_poly(mat, n):
    """Minimal polynomial of an n x n SparseMatrix (coefficients low first)."""
    powers = [SparseMatrix.identity(n)]
    flat = lambda m: {i * n + j: x for j, col in m.cols.items() for i, x in col.items()}
    while True:
        nxt = mat @ powers[-1]
        vecs = [flat(p) for p in powers]
        A = SparseMatrix.from_columns(n * n, vecs)
        try:
            sol = solve(A, flat(nxt))
        except Inconsistent:
            powers.append(nxt)
            continue
        coeffs = [-sol.get(k, 0) for k in range(len(powers))] + [1]
        return coeffs


def find_characters(A):
    """All algebra maps A -> Q, as lists of values on the basis.

    Characters vanish on the ideal generated by commutators; on the
    annihilator of that ideal the transposed left multiplications commute
    and their joint rational eigenvalues are exactly the characters.
    """
    n = A.dim
    comm = []
    for i in range(n):
        for j in range(i + 1, n):
            d = vclean(vadd(A.mul_basis(i, j), A.mul_basis(j, i), -1))
            if d:
                comm.append(d)
    ideal = Subspace.span(n, comm)
    while True:
        more = []
        for v in ideal.vectors():
            for k in range(n):
                more.append(A.mul({k: 1}, v))
                more.append(A.mul(v, {k: 1}))
        nxt = Subspace.span(n, ideal.vectors() + more)
        if nxt.dim == ideal.dim:
            break
        ideal = nxt
    # covectors vanishing on the ideal
    rows = SparseMatrix.from_columns(n, ideal.vectors()).transpose()
    spaces = [(kernel(rows), [])]
    for b in range(n):
        L = A.left_mult_matrix({b: 1}).transpose()
        nxt = []
        for V, vals in spaces:
            if V.dim == 0:
                continue
            R = _restrict_cov(L, V)
            for lam in _rational_roots(_min_poly(R, V.dim)):
                shifted = R - SparseMatrix.identity(V.dim).scale(lam)
                ker = kernel(shifted)
                if ker.dim == 0:
                    continue
                vecs = [_combine(V, w) for w in ker.vectors()]
                nxt.append((Subspace.span(n, vecs), vals + [lam]))
        spaces = nxt
    chars = [list(vals) for V, vals in spaces if V.dim > 0]
    chars.sort(reverse=True)
    return [c for c in chars if sum(A.unit.get(i, 0) * c[i] for i in range(n)) == 1]


def _combine(V, coords):
    vecs = V.vectors()
    out = {}
    for k, x in coords.items():
        vadd_into(out, vecs[k], x)
    return vclean(out)


def _restrict_cov(L, V):
    cols = [V.coordinates(L.apply(v)) for v in V.vectors()]
    return SparseMatrix.from_columns(V.dim, cols)


def find_grouplikes(H):
    """Grouplike elements (Delta g = g (x) g, eps(g) = 1) as dicts."""
    D = dual_hopf(H)
    out = []
    for c in find_characters(D):
        out.append(vclean({i: c[i] for i in range(H.dim)}))
    for g in out:
        if H.delta(g) != tensor_product(g, g) or H.eps(g) != 1:
            raise InvalidStructure("grouplike", g)
    return out


def is_character(A, chi):
    for i, j in product(range(A.dim), repeat=2):
        v = sum(x * chi[k] for k, x in A.mul_basis(i, j).items())
        if v != chi[i] * chi[j]:
            return False
    return sum(x * chi[k] for k, x in A.unit.items()) == 1


def char_value(chi, u):
    return norm(sum(x * chi[i] for i, x in u.items()))


def integral_space(H):
    """Left integrals on H: functionals f with f(h1) h2 = f(h) 1."""
    n = H.dim
    rows = []
    for i in range(n):
        for l in range(n):
            row = {}
            for (j, k), c in H.comult[i].items():
                if k == l:
                    row[j] = row.get(j, 0) + c
            u = H.unit.get(l, 0)
            if u:
                row[i] = row.get(i, 0) - u
            row = vclean(row)
            if row:
                rows.append(row)
    M = SparseMatrix.from_columns(n, rows).transpose() if rows else SparseMatrix(0, n)
    return kernel(M)


def find_haar_integral(H):
    """Normalized left integral as a list of values, or None."""
    n = H.dim
    space = integral_space(H)
    vals = [sum(H.unit.get(i, 0) * v.get(i, 0) for i in range(n)) for v in space.vectors()]
    for k, val in enumerate(vals):
        if val:
            v = space.vectors()[k]
            return [norm(Fraction(v.get(i, 0)) / val) for i in range(n)]
    return None


def integral_element(H):
    """Two-sided normalized integral in H (h L = eps(h) L, eps(L) = 1), or None."""
    D = dual_hopf(H)
    f = find_haar_integral(D)
    if f is None:
        return None
    L = vclean({i: f[i] for i in range(H.dim)})
    for i in range(H.dim):
        if H.mul({i: 1}, L) != vscale(L, H.counit[i]) or H.mul(L, {i: 1}) != vscale(L, H.counit[i]):
            return None
    return L


# ---------------------------------------------------------------------------
# twisted antipodes and modular pairs

def twisted_antipode(H, delta):
    """S~(h) = delta(h1) S(h2), as a list of images of basis elements."""
    out = []
    for i in range(H.dim):
        v = {}
        for (a, b), c in H.comult[i].items():
            if delta[a]:
                vadd_into(v, H.antipode[b], c * delta[a])
        out.append(vclean(v))
    return out


def hat_antipode(H, delta, sigma):
    """S^(h) = delta(h2) sigma S(h1)."""
    out = []
    for i in range(H.dim):
        v = {}
        for (a, b), c in H.comult[i].items():
            if delta[b]:
                vadd_into(v, H.mul(sigma, H.antipode[a]), c * delta[b])
        out.append(vclean(v))
    return out


def _linear(images, u):
    out = {}
    for i, x in u.items():
        vadd_into(out, images[i], x)
    return vclean(out)


def modular_pair_report(H, delta, sigma, kind="cm"):
    """(ok, reason) for a modular pair in involution.

    kind "cm":  delta(sigma) = 1 and (sigma^{-1} S~)^2 = id.
    kind "kr":  delta(sigma) = 1 and S^^2 = id.
    """
    if not is_character(H, delta):
        return False, "delta is not a character"
    if H.delta(sigma) != tensor_product(sigma, sigma) or H.eps(sigma) != 1:
        return False, "sigma is not grouplike"
    if char_value(delta, sigma) != 1:
        return False, "delta(sigma) != 1"
    if kind == "cm":
        St = twisted_antipode(H, delta)
        sinv = H.S(sigma)
        f = [H.mul(sinv, St[i]) for i in range(H.dim)]
    else:
        f = hat_antipode(H, delta, sigma)
    for i in range(H.dim):
        if _linear(f, f[i]) != {i: 1}:
            return False, "involution fails on %s" % H.labels[i]
    return True, ""


def is_modular_pair_in_involution(H, delta, sigma, kind="cm"):
    return modular_pair_report(H, delta, sigma, kind)[0]


def counit_character(H):
    return list(H.counit)


def unit_grouplike(H):
    return dict(H.unit)
