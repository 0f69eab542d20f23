"""
Paracyclic, cyclic, cocyclic and cylindrical modules as per-degree matrices.

A ``ParaCyclicModule`` is given in the homological direction: faces
``face(n, i): X_n -> X_{n-1}`` (0 <= i <= n), degeneracies
``degeneracy(n, i): X_n -> X_{n+1}`` (0 <= i <= n) and the cyclic operator
``cyclic(n): X_n -> X_n``.  Composition is function composition, so the
relation ``face_i cyclic = cyclic face_{i-1}`` reads
``face(n, i) @ cyclic(n) == cyclic(n-1) @ face(n, i-1)``.

A ``CocyclicModule`` stores cofaces ``X^{n-1} -> X^n``, codegeneracies
``X^{n+1} -> X^n`` and ``cyclic(n)``; its transpose is a cyclic module
and that is what the homology code consumes.

    >>> from .hopfcore import group_algebra, cyclic_group
    >>> M = algebra_cyclic_module(group_algebra(cyclic_group(2)))
    >>> M.dim(2), check_cyclic_axioms(M, 3)
    (8, [])
"""

from itertools import product

from .exactla import SparseMatrix, kron, vclean, vadd_into, rank


class AxiomFailure(ValueError):
    pass


class TensorSpace:
    """Basis of V_1 (x) ... (x) V_k as tuples, first factor most significant."""

    def __init__(self, dims):
        self.dims = tuple(dims)
        size = 1
        for d in self.dims:
            size *= d
        self.size = size
        self._tuples = None

    def index(self, t):
        idx = 0
        for x, d in zip(t, self.dims):
            idx = idx * d + x
        return idx

    def tuples(self):
        if self._tuples is None:
            self._tuples = list(product(*[range(d) for d in self.dims]))
        return self._tuples

    def matrix(self, target, f):
        """Matrix of the linear map whose value on basis tuple t is f(t)."""
        cols = {}
        idx = target.index
        for j, t in enumerate(self.tuples()):
            out = f(t)
            if out:
                col = {}
                for k, v in out.items():
                    if v:
                        i = idx(k)
                        col[i] = col.get(i, 0) + v
                col = vclean(col)
                if col:
                    cols[j] = col
        m = SparseMatrix(target.size, self.size)
        m.cols = cols
        return m


_SPACES = {}


def tspace(dims):
    dims = tuple(dims)
    s = _SPACES.get(dims)
    if s is None:
        s = _SPACES[dims] = TensorSpace(dims)
    return s


class ParaCyclicModule:
    """Operators are produced on demand by callables and memoized.

    ``order``: None for paracyclic, r when cyclic(n)^{r(n+1)} = id.
    """

    def __init__(self, dim, face, degeneracy, cyclic, name="X", order=1, cache=None):
        self._dim = dim
        self._face = face
        self._deg = degeneracy
        self._cyc = cyclic
        self.name = name
        self.order = order
        self.memo = {}
        self.cache = cache

    def __repr__(self):
        return "ParaCyclicModule(%s)" % self.name

    def _get(self, key, make):
        m = self.memo.get(key)
        if m is None:
            if self.cache is not None:
                m = self.cache.fetch(self, key, make)
            else:
                m = make()
            self.memo[key] = m
        return m

    def dim(self, n):
        return self._dim(n)

    def face(self, n, i):
        if not 0 <= i <= n or n < 1:
            raise IndexError("face %d on degree %d" % (i, n))
        return self._get(("face", n, i), lambda: self._face(n, i))

    def degeneracy(self, n, i):
        if not 0 <= i <= n:
            raise IndexError("degeneracy %d on degree %d" % (i, n))
        return self._get(("deg", n, i), lambda: self._deg(n, i))

    def cyclic(self, n):
        return self._get(("cyc", n), lambda: self._cyc(n))

    def identity(self, n):
        return self._get(("id", n), lambda: SparseMatrix.identity(self.dim(n)))

    def is_cocyclic_dual(self):
        return False


class CocyclicModule:
    """Cofaces ``coface(n, i): X^{n-1} -> X^n`` (0 <= i <= n), codegeneracies
    ``codegeneracy(n, i): X^{n+1} -> X^n`` (0 <= i <= n), ``cyclic(n)``."""

    def __init__(self, dim, coface, codegeneracy, cyclic, name="X", order=1, cache=None):
        self._dim = dim
        self.name = name
        self.order = order
        self.memo = {}
        self.cache = cache
        self._coface = coface
        self._codeg = codegeneracy
        self._cyc = cyclic
        self._dual = None

    def __repr__(self):
        return "CocyclicModule(%s)" % self.name

    def _get(self, key, make):
        m = self.memo.get(key)
        if m is None:
            if self.cache is not None:
                m = self.cache.fetch(self, key, make)
            else:
                m = make()
            self.memo[key] = m
        return m

    def dim(self, n):
        return self._dim(n)

    def coface(self, n, i):
        return self._get(("coface", n, i), lambda: self._coface(n, i))

    def codegeneracy(self, n, i):
        return self._get(("codeg", n, i), lambda: self._codeg(n, i))

    def cyclic(self, n):
        return self._get(("cyc", n), lambda: self._cyc(n))

    def dual(self):
        """The transposed cyclic module (same dimensions)."""
        if self._dual is None:
            self._dual = ParaCyclicModule(
                self._dim,
                lambda n, i: self.coface(n, i).transpose(),
                lambda n, i: self.codegeneracy(n, i).transpose(),
                lambda n: self.cyclic(n).transpose(),
                name=self.name + "^t", order=self.order)
            self._dual.source = self
        return self._dual


def as_cyclic(M):
    return M.dual() if isinstance(M, CocyclicModule) else M


# ---------------------------------------------------------------------------
# axioms

def _cmp(fails, name, n, idx, lhs, rhs):
    if lhs != rhs:
        fails.append({"relation": name, "degree": n, "indices": idx,
                      "entry": lhs.first_difference(rhs)})


def check_simplicial(M, max_n, faces_only=False):
    """Simplicial identities for all instances living in degrees <= max_n."""
    M = as_cyclic(M)
    fails = []
    for n in range(2, max_n + 1):
        for j in range(n + 1):
            for i in range(j):
                _cmp(fails, "face-face", n, (i, j),
                     M.face(n - 1, i) @ M.face(n, j), M.face(n - 1, j - 1) @ M.face(n, i))
    if faces_only:
        return fails
    for n in range(0, max_n - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                _cmp(fails, "degeneracy-degeneracy", n, (i, j),
                     M.degeneracy(n + 1, i) @ M.degeneracy(n, j),
                     M.degeneracy(n + 1, j + 1) @ M.degeneracy(n, i))
    for n in range(0, max_n):
        # d_i s_j on X_n, s_j: X_n -> X_{n+1}, d_i: X_{n+1} -> X_n
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = M.face(n + 1, i) @ M.degeneracy(n, j)
                if i < j:
                    rhs = M.degeneracy(n - 1, j - 1) @ M.face(n, i)
                elif i == j or i == j + 1:
                    rhs = M.identity(n)
                else:
                    rhs = M.degeneracy(n - 1, j) @ M.face(n, i - 1)
                _cmp(fails, "face-degeneracy", n, (i, j), lhs, rhs)
    return fails


def check_cyclic_relations(M, max_n, order=None):
    """Relations between the cyclic operator and faces/degeneracies, plus
    cyclic(n)^{order*(n+1)} = id when order is given."""
    M = as_cyclic(M)
    fails = []
    for n in range(1, max_n + 1):
        t = M.cyclic(n)
        tl = M.cyclic(n - 1)
        for i in range(1, n + 1):
            _cmp(fails, "face-cyclic", n, (i,), M.face(n, i) @ t, tl @ M.face(n, i - 1))
        _cmp(fails, "face0-cyclic", n, (0,), M.face(n, 0) @ t, M.face(n, n))
    for n in range(0, max_n):
        t = M.cyclic(n)
        tu = M.cyclic(n + 1)
        for i in range(1, n + 1):
            _cmp(fails, "degeneracy-cyclic", n, (i,),
                 M.degeneracy(n, i) @ t, tu @ M.degeneracy(n, i - 1))
        _cmp(fails, "degeneracy0-cyclic", n, (0,),
             M.degeneracy(n, 0) @ t, tu @ tu @ M.degeneracy(n, n))
    if order:
        for n in range(0, max_n + 1):
            p = M.cyclic(n) ** (order * (n + 1))
            _cmp(fails, "cyclic-order", n, (order,), p, M.identity(n))
    return fails


def check_cyclic_axioms(M, max_n, paracyclic=False):
    """All relation failures through degree max_n (empty list when fine)."""
    order = None if paracyclic else getattr(M, "order", 1)
    return check_simplicial(M, max_n) + check_cyclic_relations(M, max_n, order)


def require_axioms(M, max_n, paracyclic=False):
    fails = check_cyclic_axioms(M, max_n, paracyclic)
    if fails:
        raise AxiomFailure(fails[0])
    return M


# ---------------------------------------------------------------------------
# constructions

def _unit_items(A):
    return list(A.unit.items())


def algebra_cyclic_module(A, twist=None, name=None):
    """A-natural: X_n = A^{(x)(n+1)}.  With an automorphism ``twist``
    (list of images of basis elements) the last face and the cyclic
    operator apply it to a_n, giving a paracyclic module."""
    d = A.dim
    mul = A.mul_basis
    unit = _unit_items(A)
    g = (lambda i: twist[i]) if twist is not None else (lambda i: {i: 1})

    def space(n):
        return tspace((d,) * (n + 1))

    def face(n, i):
        if i < n:
            def f(t):
                out = {}
                for k, c in mul(t[i], t[i + 1]).items():
                    out[t[:i] + (k,) + t[i + 2:]] = c
                return out
        else:
            def f(t):
                out = {}
                for a, x in g(t[n]).items():
                    for k, c in mul(a, t[0]).items():
                        key = (k,) + t[1:n]
                        out[key] = out.get(key, 0) + x * c
                return out
        return space(n).matrix(space(n - 1), f)

    def deg(n, i):
        def f(t):
            return {t[:i + 1] + (u,) + t[i + 1:]: c for u, c in unit}
        return space(n).matrix(space(n + 1), f)

    def cyc(n):
        def f(t):
            return {(a,) + t[:n]: x for a, x in g(t[n]).items()}
        return space(n).matrix(space(n), f)

    M = ParaCyclicModule(lambda n: d ** (n + 1), face, deg, cyc,
                         name or (A.name + "-natural"), order=None if twist is not None else 1)
    M.algebra = A
    return M


class NotAutomorphism(ValueError):
    pass


def _images(A, g):
    if isinstance(g, SparseMatrix):
        return [g.column(j) for j in range(A.dim)]
    return [vclean(v) for v in g]


def automorphism_order(A, g, bound=64):
    """Verify g (a matrix or the list of images of basis elements) is an
    algebra automorphism and return its order, or None when g^r != id for
    r <= bound."""
    g = _images(A, g)
    G = SparseMatrix.from_columns(A.dim, g)
    if rank(G) != A.dim:
        raise NotAutomorphism("not invertible")
    img = lambda u: G.apply(u)
    if img(A.unit) != A.unit:
        raise NotAutomorphism("unit not preserved")
    for i in range(A.dim):
        for j in range(A.dim):
            if img(A.mul_basis(i, j)) != A.mul(g[i], g[j]):
                raise NotAutomorphism("not multiplicative at (%s, %s)" % (A.labels[i], A.labels[j]))
    P = G
    I = SparseMatrix.identity(A.dim)
    for r in range(1, bound + 1):
        if P == I:
            return r
        P = G @ P
    return None


def twisted_cyclic_module(A, g):
    """A-natural twisted by an algebra automorphism g (list of images).
    The module is r-cyclic with r the order of g (None if infinite)."""
    r = automorphism_order(A, g)
    g = _images(A, g)
    M = algebra_cyclic_module(A, twist=g, name=A.name + "-natural-twisted")
    M.order = r
    return M


class Bimodule:
    """Finite dimensional A-bimodule: ``left[(a, m)]`` and ``right[(m, a)]``."""

    def __init__(self, A, dim, left, right, name="M"):
        self.A = A
        self.dim = dim
        self.left = left
        self.right = right
        self.name = name

    def act_left(self, a, m):
        return self.left.get((a, m), {})

    def act_right(self, m, a):
        return self.right.get((m, a), {})


def regular_bimodule(A):
    return Bimodule(A, A.dim, dict(A.mult), dict(A.mult), A.name)


def character_bimodule(A, left_char, right_char, name="k"):
    """One-dimensional bimodule: a.m = chi_l(a) m and m.a = chi_r(a) m."""
    left = {(a, 0): {0: left_char[a]} for a in range(A.dim) if left_char[a]}
    right = {(0, a): {0: right_char[a]} for a in range(A.dim) if right_char[a]}
    return Bimodule(A, 1, left, right, name)


def hochschild_coeff_complex(A, M):
    """Simplicial module C_n(A, M) = M (x) A^{(x)n}; cyclic operator absent
    (the identity placeholder is never used for homology)."""
    d = A.dim
    mul = A.mul_basis
    unit = _unit_items(A)

    def space(n):
        return tspace((M.dim,) + (d,) * n)

    def face(n, i):
        if i == 0:
            def f(t):
                return {(k,) + t[2:]: c for k, c in M.act_right(t[0], t[1]).items()}
        elif i < n:
            def f(t):
                return {t[:i] + (k,) + t[i + 2:]: c for k, c in mul(t[i], t[i + 1]).items()}
        else:
            def f(t):
                return {(k,) + t[1:n]: c for k, c in M.act_left(t[n], t[0]).items()}
        return space(n).matrix(space(n - 1), f)

    def deg(n, i):
        def f(t):
            return {t[:i + 1] + (u,) + t[i + 1:]: c for u, c in unit}
        return space(n).matrix(space(n + 1), f)

    def cyc(n):
        raise AxiomFailure("Hochschild complex with coefficients has no cyclic operator")

    X = ParaCyclicModule(lambda n: M.dim * d ** n, face, deg, cyc,
                         "C(%s,%s)" % (A.name, M.name), order=None)
    return X


# coalgebra side ------------------------------------------------------------

def coalgebra_cocyclic_module(C):
    """C-natural: X^n = C^{(x)(n+1)} with cofaces from the coproduct."""
    d = C.dim

    def space(n):
        return tspace((d,) * (n + 1))

    def coface(n, i):
        # X^{n-1} -> X^n
        if i < n:
            def f(t):
                return {t[:i] + (a, b) + t[i + 1:]: c for (a, b), c in C.comult[t[i]].items()}
        else:
            def f(t):
                return {(b,) + t[1:] + (a,): c for (a, b), c in C.comult[t[0]].items()}
        return space(n - 1).matrix(space(n), f)

    def codeg(n, i):
        # X^{n+1} -> X^n, counit on slot i+1
        def f(t):
            e = C.counit[t[i + 1]]
            return {t[:i + 1] + t[i + 2:]: e} if e else {}
        return space(n + 1).matrix(space(n), f)

    def cyc(n):
        def f(t):
            return {t[1:] + t[:1]: 1}
        return space(n).matrix(space(n), f)

    X = CocyclicModule(lambda n: d ** (n + 1), coface, codeg, cyc, C.name + "-conatural")
    X.coalgebra = C
    return X


class Bicomodule:
    """Finite dimensional C-bicomodule: ``right[m] = {(m', c): x}`` for
    m -> m(0) (x) m(1), ``left[m] = {(c, m'): x}`` for m -> m(-1) (x) m(0)."""

    def __init__(self, C, dim, left, right, name="M"):
        self.C = C
        self.dim = dim
        self.left = left
        self.right = right
        self.name = name


def grouplike_bicomodule(C, g, h, name=None):
    """k with right coaction 1 -> 1 (x) g and left coaction 1 -> h (x) 1."""
    right = [{(0, i): x for i, x in g.items()}]
    left = [{(i, 0): x for i, x in h.items()}]
    return Bicomodule(C, 1, left, right, name or "k")


def coalgebra_coeff_complex(C, M):
    """Cosimplicial module C^n = M (x) C^{(x)n}."""
    d = C.dim

    def space(n):
        return tspace((M.dim,) + (d,) * n)

    def coface(n, i):
        # (M (x) C^{n-1}) -> (M (x) C^n)
        if i == 0:
            def f(t):
                return {(m, c) + t[1:]: x for (m, c), x in M.right[t[0]].items()}
        elif i < n:
            def f(t):
                return {t[:i] + (a, b) + t[i + 1:]: x for (a, b), x in C.comult[t[i]].items()}
        else:
            def f(t):
                return {(m,) + t[1:] + (c,): x for (c, m), x in M.left[t[0]].items()}
        return space(n - 1).matrix(space(n), f)

    def codeg(n, i):
        def f(t):
            e = C.counit[t[i + 1]]
            return {t[:i + 1] + t[i + 2:]: e} if e else {}
        return space(n + 1).matrix(space(n), f)

    def cyc(n):
        raise AxiomFailure("coefficient complex has no cyclic operator")

    return CocyclicModule(lambda n: M.dim * d ** n, coface, codeg, cyc,
                          "C(%s,%s)" % (C.name, M.name), order=None)


# ---------------------------------------------------------------------------
# cylindrical modules

class CylindricalModule:
    """Bigraded X_{p,q}.  The first family (``hface``, ``hdeg``, ``hcyc``) moves
    p, the second (``vface``, ``vdeg``, ``vcyc``) moves q; the families commute
    and hcyc^{p+1} vcyc^{q+1} = id."""

    def __init__(self, dim, hface, hdeg, hcyc, vface, vdeg, vcyc, name="X"):
        self._dim = dim
        self._ops = {"hface": hface, "hdeg": hdeg, "hcyc": hcyc,
                     "vface": vface, "vdeg": vdeg, "vcyc": vcyc}
        self.name = name
        self.memo = {}

    def dim(self, p, q):
        return self._dim(p, q)

    def op(self, kind, p, q, *i):
        key = (kind, p, q) + i
        m = self.memo.get(key)
        if m is None:
            m = self.memo[key] = self._ops[kind](p, q, *i)
        return m

    def hface(self, p, q, i):
        return self.op("hface", p, q, i)

    def hdeg(self, p, q, i):
        return self.op("hdeg", p, q, i)

    def hcyc(self, p, q):
        return self.op("hcyc", p, q)

    def vface(self, p, q, i):
        return self.op("vface", p, q, i)

    def vdeg(self, p, q, i):
        return self.op("vdeg", p, q, i)

    def vcyc(self, p, q):
        return self.op("vcyc", p, q)

    def row(self, q):
        """The paracyclic module p -> X_{p,q} (first family)."""
        return ParaCyclicModule(lambda p: self.dim(p, q),
                                lambda p, i: self.hface(p, q, i),
                                lambda p, i: self.hdeg(p, q, i),
                                lambda p: self.hcyc(p, q),
                                "%s[.,%d]" % (self.name, q), order=None)

    def column(self, p):
        return ParaCyclicModule(lambda q: self.dim(p, q),
                                lambda q, i: self.vface(p, q, i),
                                lambda q, i: self.vdeg(p, q, i),
                                lambda q: self.vcyc(p, q),
                                "%s[%d,.]" % (self.name, p), order=None)

    def diagonal(self):
        """Cyclic module n -> X_{n,n} with faces d_i delta_i etc."""
        M = ParaCyclicModule(
            lambda n: self.dim(n, n),
            lambda n, i: self.hface(n, n - 1, i) @ self.vface(n, n, i),
            lambda n, i: self.hdeg(n, n + 1, i) @ self.vdeg(n, n, i),
            lambda n: self.hcyc(n, n) @ self.vcyc(n, n),
            "diag(%s)" % self.name, order=1)
        M.cylinder = self
        return M


def check_cylindrical(X, max_total):
    """Each row and column paracyclic, families commute, and the
    cylindrical identity holds, on all X_{p,q} with p + q <= max_total."""
    fails = []
    for q in range(max_total + 1):
        for f in check_cyclic_axioms(X.row(q), max_total - q, paracyclic=True):
            f["relation"] = "row %d: %s" % (q, f["relation"])
            fails.append(f)
    for p in range(max_total + 1):
        for f in check_cyclic_axioms(X.column(p), max_total - p, paracyclic=True):
            f["relation"] = "column %d: %s" % (p, f["relation"])
            fails.append(f)
    hops = lambda p, q: ([("hface", i, p - 1, q) for i in range(p + 1)] if p else []) + \
        [("hdeg", i, p + 1, q) for i in range(p + 1)] + [("hcyc", None, p, q)]
    vops = lambda p, q: ([("vface", i, p, q - 1) for i in range(q + 1)] if q else []) + \
        [("vdeg", i, p, q + 1) for i in range(q + 1)] + [("vcyc", None, p, q)]

    def get(kind, p, q, i):
        return X.op(kind, p, q) if i is None else X.op(kind, p, q, i)

    for p in range(max_total + 1):
        for q in range(max_total + 1 - p):
            for hk, hi, p2, _ in hops(p, q):
                if p2 + q > max_total:
                    continue
                for vk, vi, _, q2 in vops(p, q):
                    if p2 + q2 > max_total:
                        continue
                    lhs = get(hk, p, q2, hi) @ get(vk, p, q, vi)
                    rhs = get(vk, p2, q, vi) @ get(hk, p, q, hi)
                    _cmp(fails, "commute %s/%s" % (hk, vk), (p, q), (hi, vi), lhs, rhs)
            cyl = (X.hcyc(p, q) ** (p + 1)) @ (X.vcyc(p, q) ** (q + 1))
            _cmp(fails, "cylindrical", (p, q), (), cyl, SparseMatrix.identity(X.dim(p, q)))
    return fails


def product_cylindrical(Y, Z):
    """X_{p,q} = Y_p (x) Z_q with Y acting on p and Z on q."""
    I = lambda M, n: SparseMatrix.identity(M.dim(n))
    return CylindricalModule(
        lambda p, q: Y.dim(p) * Z.dim(q),
        lambda p, q, i: kron(Y.face(p, i), I(Z, q)),
        lambda p, q, i: kron(Y.degeneracy(p, i), I(Z, q)),
        lambda p, q: kron(Y.cyclic(p), I(Z, q)),
        lambda p, q, i: kron(I(Y, p), Z.face(q, i)),
        lambda p, q, i: kron(I(Y, p), Z.degeneracy(q, i)),
        lambda p, q: kron(I(Y, p), Z.cyclic(q)),
        "%s x %s" % (Y.name, Z.name))
