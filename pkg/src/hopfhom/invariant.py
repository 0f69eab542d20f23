"""
Invariant cyclic (co)homology of Hopf triples and cotriples.

A left Hopf triple (A, H, M) is a left H-comodule algebra A with a left
H-module M.  C_n(A, M) = M (x) A^{(x)(n+1)} is paracyclic; for a grouplike
sigma its sigma-coinvariants form a cyclic module when (M, sigma) is a
matched pair in involution.  Dually a cotriple (C, H, V) gives a
paracocyclic module whose delta-coinvariant quotient is cocyclic.

    >>> from .hopfcore import group_algebra, cyclic_group, counit_character
    >>> H = group_algebra(cyclic_group(2))
    >>> T = regular_triple(H, counit_character(H), {0: 1})
    >>> X = coinvariant_subcomplex(T)
    >>> [X.dim(n) for n in range(3)]
    [1, 2, 4]
"""

from .exactla import (SparseMatrix, Subspace, kernel, image, rank, hstack, on_quotient,
                      vadd_into, vclean, Inconsistent)
from .hopfcore import (tensor_product, twisted_antipode, find_haar_integral, matrix_algebra,
                       tensor_algebra, group_algebra, FiniteGroup, unit_grouplike)
from .cyclicfw import (ParaCyclicModule, CocyclicModule, tspace, check_cyclic_axioms,
                       algebra_cyclic_module, coalgebra_cocyclic_module)
from .hopfcyc import ComoduleAlgebraCoaction, regular_coaction, kr_cyclic, cm_cocyclic
from .homengine import cyclic_homology
from .verdict import Verdict, PreconditionError, first_mismatch


class NotMatchedInInvolution(PreconditionError):
    pass


class NotComatchedInInvolution(PreconditionError):
    pass


class OperatorEscapesSubspace(RuntimeError):
    pass


def trivial_hopf():
    """The one-dimensional Hopf algebra k."""
    return group_algebra(FiniteGroup([[0]], ["1"], "1"))


class HModule:
    """Left H-module: ``act[(h, m)] = {m': c}`` on basis elements."""

    def __init__(self, hopf, dim, act, name="M", check=True):
        self.hopf = hopf
        self.dim = dim
        self.act = {k: vclean(v) for k, v in act.items()}
        self.name = name
        if check:
            H = hopf
            for m in range(dim):
                if self.apply(H.unit, {m: 1}) != {m: 1}:
                    raise PreconditionError("unit does not act as identity")
                for h in range(H.dim):
                    for k in range(H.dim):
                        if self.apply(H.mul_basis(h, k), {m: 1}) != self.apply({h: 1}, self.apply({k: 1}, {m: 1})):
                            raise PreconditionError("action not associative")

    def apply(self, h, v):
        out = {}
        for i, x in h.items():
            for m, y in v.items():
                vadd_into(out, self.act.get((i, m), {}), x * y)
        return vclean(out)


def character_module(H, delta, name=None):
    return HModule(H, 1, {(h, 0): {0: delta[h]} for h in range(H.dim) if delta[h]},
                   name or "k_delta")


class HopfTriple:
    """(A, H, M) with A a left comodule algebra, M a left module, sigma grouplike."""

    def __init__(self, coaction, module, sigma):
        if coaction.side != "left":
            raise PreconditionError("a Hopf triple needs a left coaction")
        self.coaction = coaction
        self.hopf = coaction.hopf
        self.algebra = coaction.algebra
        self.module = module
        self.sigma = dict(sigma)

    def is_matched(self):
        M = self.module
        return all(M.apply(self.sigma, {m: 1}) == {m: 1} for m in range(M.dim))

    def twisted_antipode(self):
        """S^(m (x) h) = h(2) m (x) sigma S(h(1)) as a matrix on M (x) H."""
        H, M = self.hopf, self.module
        sp = tspace((M.dim, H.dim))

        def f(t):
            m, h = t
            out = {}
            for (a, b), c in H.comult[h].items():
                for m2, x in M.apply({b: 1}, {m: 1}).items():
                    for k, y in H.mul(self.sigma, H.antipode[a]).items():
                        out[(m2, k)] = out.get((m2, k), 0) + c * x * y
            return out
        return sp.matrix(sp, f)

    def involution_report(self):
        if not self.is_matched():
            return False, "sigma does not act trivially on M"
        S = self.twisted_antipode()
        if S @ S != SparseMatrix.identity(S.nrows):
            return False, "twisted antipode does not square to the identity"
        return True, ""


def regular_triple(H, delta, sigma):
    """(H, H, k_delta) with H coacting on itself by the coproduct."""
    return HopfTriple(regular_coaction(H, "left"), character_module(H, delta), sigma)


def trivial_triple(A):
    """(A, k, k)."""
    K = trivial_hopf()
    co = ComoduleAlgebraCoaction(K, A, [{(0, a): 1} for a in range(A.dim)], "left")
    return HopfTriple(co, character_module(K, [1]), {0: 1})


def triple_paracyclic(T):
    """Paracyclic module C_n(A, M) = M (x) A^{(x)(n+1)}."""
    A, M = T.algebra, T.module
    dA, dM = A.dim, M.dim
    mul = A.mul_basis
    unit = list(A.unit.items())
    pairs = T.coaction.pairs

    def space(n):
        return tspace((dM,) + (dA,) * (n + 1))

    def face(n, i):
        if i < n:
            def f(t):
                return {t[:i + 1] + (k,) + t[i + 3:]: c for k, c in mul(t[i + 1], t[i + 2]).items()}
        else:
            def f(t):
                out = {}
                for b, h, c in pairs(t[-1]):
                    for m, x in M.act.get((h, t[0]), {}).items():
                        for k, y in mul(b, t[1]).items():
                            key = (m, k) + t[2:-1]
                            out[key] = out.get(key, 0) + c * x * y
                return out
        return space(n).matrix(space(n - 1), f)

    def deg(n, i):
        def f(t):
            return {t[:i + 2] + (u,) + t[i + 2:]: c for u, c in unit}
        return space(n).matrix(space(n + 1), f)

    def cyc(n):
        def f(t):
            out = {}
            for b, h, c in pairs(t[-1]):
                for m, x in M.act.get((h, t[0]), {}).items():
                    key = (m, b) + t[1:-1]
                    out[key] = out.get(key, 0) + c * x
            return out
        return space(n).matrix(space(n), f)

    X = ParaCyclicModule(lambda n: dM * dA ** (n + 1), face, deg, cyc,
                         "C(%s,%s)" % (A.name, M.name), order=None)
    X.triple = T
    return X


def triple_coaction_matrix(T, n):
    """rho: C_n -> H (x) C_n, rho(m, a0..an) = a0(-1)...an(-1) (x) m (x) a0(0)..an(0)."""
    H, A, M = T.hopf, T.algebra, T.module
    src = tspace((M.dim,) + (A.dim,) * (n + 1))
    tgt = tspace((H.dim, M.dim) + (A.dim,) * (n + 1))
    pairs = T.coaction.pairs

    def f(t):
        state = {(k, ()): c for k, c in H.unit.items()}
        for a in t[1:]:
            nxt = {}
            for (P, legs), c in state.items():
                for b, h, x in pairs(a):
                    for k, y in H.mul_basis(P, h).items():
                        key = (k, legs + (b,))
                        nxt[key] = nxt.get(key, 0) + c * x * y
            state = vclean(nxt)
        return {(P, t[0]) + legs: c for (P, legs), c in state.items()}
    return src.matrix(tgt, f)


def coinvariants(T, n):
    """Subspace {x : rho(x) = sigma (x) x} of C_n."""
    H = T.hopf
    rho = triple_coaction_matrix(T, n)
    size = rho.ncols
    sig = SparseMatrix(H.dim, 1, {0: dict(T.sigma)})
    from .exactla import kron
    return kernel(rho - kron(sig, SparseMatrix.identity(size)))


def averaging_rank(T, n):
    """Rank of x -> integral(sigma^{-1} x(-1)) x(0), when a Haar integral exists."""
    H = T.hopf
    integral = find_haar_integral(H)
    if integral is None:
        return None
    rho = triple_coaction_matrix(T, n)
    size = rho.ncols
    sinv = H.S(T.sigma)
    fun = [sum(integral[k] * x for k, x in H.mul(sinv, {h: 1}).items()) for h in range(H.dim)]
    cols = {}
    for j, col in rho.cols.items():
        out = {}
        for i, x in col.items():
            h, rest = divmod(i, size)
            if fun[h]:
                out[rest] = out.get(rest, 0) + fun[h] * x
        out = vclean(out)
        if out:
            cols[j] = out
    return rank(SparseMatrix(size, size, cols))


def _restricted(op, src, tgt):
    cols = []
    for v in src.vectors():
        w = op.apply(v)
        if not tgt.contains(w):
            raise OperatorEscapesSubspace("operator leaves the coinvariant subspace")
        cols.append(tgt.coordinates(w))
    return SparseMatrix.from_columns(tgt.dim, cols)


def coinvariant_subcomplex(T, check=True):
    """Cyclic module of sigma-coinvariants, in coordinates of kernel bases."""
    if check:
        ok, why = T.involution_report()
        if not ok:
            raise NotMatchedInInvolution(why)
    P = triple_paracyclic(T)
    subs = {}

    def sub(n):
        if n not in subs:
            subs[n] = coinvariants(T, n)
        return subs[n]

    X = ParaCyclicModule(lambda n: sub(n).dim,
                         lambda n, i: _restricted(P.face(n, i), sub(n), sub(n - 1)),
                         lambda n, i: _restricted(P.degeneracy(n, i), sub(n), sub(n + 1)),
                         lambda n: _restricted(P.cyclic(n), sub(n), sub(n)),
                         "C^H(%s,%s)" % (T.algebra.name, T.module.name))
    X.ambient = P
    X.subspace = sub
    return X


def coaction_antipode_identity_check(T):
    """a(-1) sigma S(a(-3)) (x) a(-2) m (x) a(0) = sigma (x) a(-1) m (x) a(0)
    for all basis a, m."""
    H, A, M = T.hopf, T.algebra, T.module
    pairs = T.coaction.pairs
    fails = []
    for a in range(A.dim):
        # three-fold left coaction: (h3, h2, h1, a0) with a -> h1 (x) a', a' -> h2 (x) a'', ...
        legs = {}
        for b, h1, c in pairs(a):
            for (x, y), c2 in H.comult[h1].items():
                for (u, v), c3 in H.comult[x].items():
                    key = (u, v, y, b)
                    legs[key] = legs.get(key, 0) + c * c2 * c3
        for m in range(M.dim):
            lhs, rhs = {}, {}
            for (h3, h2, h1, b), c in legs.items():
                if not c:
                    continue
                left = H.mul({h1: 1}, H.mul(T.sigma, H.antipode[h3]))
                for m2, x in M.apply({h2: 1}, {m: 1}).items():
                    for k, y in left.items():
                        key = (k, m2, b)
                        lhs[key] = lhs.get(key, 0) + c * x * y
            for b, h, c in pairs(a):
                for m2, x in M.apply({h: 1}, {m: 1}).items():
                    for k, y in T.sigma.items():
                        key = (k, m2, b)
                        rhs[key] = rhs.get(key, 0) + c * x * y
            if vclean(lhs) != vclean(rhs):
                fails.append({"a": A.labels[a], "m": m})
    return Verdict.from_failures(fails)


# ---------------------------------------------------------------------------
# identification with the KR module

def kr_to_triple(H, sigma, n):
    """Phi(h1..hn) = sigma S(h1(1)...hn(1)) (x) h1(2) (x) ... (x) hn(2)
    from H^{(x)n} into C_n(H, k) = H^{(x)(n+1)}."""
    src = tspace((H.dim,) * n)
    tgt = tspace((1,) + (H.dim,) * (n + 1))
    sigS = [H.mul(sigma, H.antipode[p]) for p in range(H.dim)]

    def f(t):
        state = {(k, ()): c for k, c in H.unit.items()}
        for h in t:
            nxt = {}
            for (P, legs), c in state.items():
                for (a, b), x in H.comult[h].items():
                    for k, y in H.mul_basis(P, a).items():
                        key = (k, legs + (b,))
                        nxt[key] = nxt.get(key, 0) + c * x * y
            state = vclean(nxt)
        out = {}
        for (P, legs), c in state.items():
            for k, y in sigS[P].items():
                key = (0, k) + legs
                out[key] = out.get(key, 0) + c * y
        return out
    return src.matrix(tgt, f)


def triple_to_kr(H, n):
    """Psi = eps (x) id."""
    src = tspace((1,) + (H.dim,) * (n + 1))
    tgt = tspace((H.dim,) * n)

    def f(t):
        e = H.counit[t[1]]
        return {t[2:]: e} if e else {}
    return src.matrix(tgt, f)


def kr_identification_check(H, delta, sigma, max_n=3):
    """Compare the regular triple's coinvariant module with the KR module:
    Phi lands in the coinvariants, Psi Phi = id, Phi Psi = id on the
    coinvariants, and Phi intertwines every operator."""
    T = regular_triple(H, delta, sigma)
    P = triple_paracyclic(T)
    KR = kr_cyclic(H, delta, sigma)
    fails = []
    phi = {n: kr_to_triple(H, sigma, n) for n in range(max_n + 1)}
    psi = {n: triple_to_kr(H, n) for n in range(max_n + 1)}
    for n in range(max_n + 1):
        V = coinvariants(T, n)
        if V.dim != H.dim ** n:
            fails.append({"check": "dimension", "degree": n})
        if any(not V.contains(phi[n].column(j)) for j in range(phi[n].ncols)):
            fails.append({"check": "Phi into coinvariants", "degree": n})
        if psi[n] @ phi[n] != SparseMatrix.identity(H.dim ** n):
            fails.append({"check": "Psi Phi = id", "degree": n})
        for v in V.vectors():
            if phi[n].apply(psi[n].apply(v)) != v:
                fails.append({"check": "Phi Psi = id on coinvariants", "degree": n})
                break
        if n >= 1:
            for i in range(n + 1):
                if P.face(n, i) @ phi[n] != phi[n - 1] @ KR.face(n, i):
                    fails.append({"check": "face", "degree": n, "index": i})
        if n < max_n:
            for i in range(n + 1):
                if P.degeneracy(n, i) @ phi[n] != phi[n + 1] @ KR.degeneracy(n, i):
                    fails.append({"check": "degeneracy", "degree": n, "index": i})
        if P.cyclic(n) @ phi[n] != phi[n] @ KR.cyclic(n):
            fails.append({"check": "cyclic", "degree": n})
    return Verdict.from_failures(fails)


# ---------------------------------------------------------------------------
# Morita invariance

def matrix_triple(T, k):
    """(M_k(A), H, M) with rho(a (x) u) = a(-1) (x) a(0) (x) u."""
    A = T.algebra
    Mk = matrix_algebra(k)
    B = tensor_algebra(A, Mk)
    co = []
    for a in range(A.dim):
        for u in range(Mk.dim):
            co.append({(h, b * Mk.dim + u): c for (h, b), c in T.coaction.coaction[a].items()})
    return HopfTriple(ComoduleAlgebraCoaction(T.hopf, B, co, "left"), T.module, T.sigma)


def morita_compare(T, k, max_n=2):
    ok, why = T.involution_report()
    if not ok:
        raise NotMatchedInInvolution(why)
    left = cyclic_homology(coinvariant_subcomplex(T), max_n).dims
    right = cyclic_homology(coinvariant_subcomplex(matrix_triple(T, k)), max_n).dims
    w = first_mismatch(left, right)
    return Verdict(w is None, w, {"left": left, "right": right})


# ---------------------------------------------------------------------------
# cotriples

class ModuleCoalgebra:
    """Coalgebra C (any object with comult, counit, dim, labels) with a left
    H-action ``act[(h, c)] = {c': x}`` making it an H-module coalgebra."""

    def __init__(self, hopf, coalgebra, act, check=True):
        self.hopf = hopf
        self.coalgebra = coalgebra
        self.dim = coalgebra.dim
        self.act = {k: vclean(v) for k, v in act.items()}
        if check:
            bad = self.violations()
            if bad:
                raise PreconditionError("not a module coalgebra: %s" % (bad[0],))

    def apply(self, h, v):
        out = {}
        for i, x in h.items():
            for c, y in v.items():
                vadd_into(out, self.act.get((i, c), {}), x * y)
        return vclean(out)

    def violations(self):
        H, C = self.hopf, self.coalgebra
        bad = []
        for h in range(H.dim):
            for c in range(C.dim):
                hc = self.apply({h: 1}, {c: 1})
                lhs = {}
                for d, x in hc.items():
                    vadd_into(lhs, C.comult[d], x)
                rhs = {}
                for (h1, h2), x in H.comult[h].items():
                    for (c1, c2), y in C.comult[c].items():
                        vadd_into(rhs, tensor_product(self.apply({h1: 1}, {c1: 1}),
                                                      self.apply({h2: 1}, {c2: 1})), x * y)
                if vclean(lhs) != vclean(rhs):
                    bad.append(("coproduct", H.labels[h], C.labels[c]))
                e = sum(C.counit[d] * x for d, x in hc.items())
                if e != H.counit[h] * C.counit[c]:
                    bad.append(("counit", H.labels[h], C.labels[c]))
        return bad


class HComodule:
    """Left H-comodule: ``coaction[v] = {(h, v'): c}``."""

    def __init__(self, hopf, dim, coaction, name="V"):
        self.hopf = hopf
        self.dim = dim
        self.coaction = [vclean(coaction[v]) for v in range(dim)]
        self.name = name


def grouplike_comodule(H, sigma):
    return HComodule(H, 1, [{(h, 0): c for h, c in sigma.items()}], "k_sigma")


class HopfCotriple:
    def __init__(self, modcoalg, comodule, delta):
        self.C = modcoalg
        self.hopf = modcoalg.hopf
        self.V = comodule
        self.delta = list(delta)

    def is_comatched(self):
        for v in range(self.V.dim):
            out = {}
            for (h, w), c in self.V.coaction[v].items():
                if self.delta[h]:
                    vadd_into(out, {w: c * self.delta[h]})
            if vclean(out) != {v: 1}:
                return False
        return True

    def twisted_antipode(self):
        """S~_V(v (x) h) = v(0) (x) S^{-1}(v(-1)) S~(h)."""
        H, V = self.hopf, self.V
        St = twisted_antipode(H, self.delta)
        sp = tspace((V.dim, H.dim))

        def f(t):
            v, h = t
            out = {}
            for (g, w), c in V.coaction[v].items():
                for k, x in H.mul(H.Sinv_basis(g), St[h]).items():
                    out[(w, k)] = out.get((w, k), 0) + c * x
            return out
        return sp.matrix(sp, f)

    def involution_report(self):
        if not self.is_comatched():
            return False, "not a comatched pair"
        S = self.twisted_antipode()
        if S @ S != SparseMatrix.identity(S.nrows):
            return False, "twisted antipode does not square to the identity"
        return True, ""


def regular_cotriple(H, delta, sigma):
    """(H, H, k_sigma), H acting on itself by left multiplication."""
    act = {(h, c): H.mul_basis(h, c) for h in range(H.dim) for c in range(H.dim)}
    return HopfCotriple(ModuleCoalgebra(H, H, act), grouplike_comodule(H, sigma), delta)


def trivial_cotriple(C):
    K = trivial_hopf()
    act = {(0, c): {c: 1} for c in range(C.dim)}
    return HopfCotriple(ModuleCoalgebra(K, C, act), grouplike_comodule(K, {0: 1}), [1])


def cotriple_paracocyclic(ct):
    """Paracocyclic module V (x) C^{(x)(n+1)} in degree n."""
    Cm, V, H = ct.C, ct.V, ct.hopf
    C = Cm.coalgebra
    d = C.dim

    def space(n):
        return tspace((V.dim,) + (d,) * (n + 1))

    def coface(n, i):
        # degree n-1 -> n
        if i < n:
            def f(t):
                return {t[:i + 1] + (a, b) + t[i + 2:]: c for (a, b), c in C.comult[t[i + 1]].items()}
        else:
            def f(t):
                out = {}
                for (g, w), c in V.coaction[t[0]].items():
                    for (a, b), x in C.comult[t[1]].items():
                        for k, y in Cm.act.get((g, a), {}).items():
                            key = (w, b) + t[2:] + (k,)
                            out[key] = out.get(key, 0) + c * x * y
                return out
        return space(n - 1).matrix(space(n), f)

    def codeg(n, i):
        def f(t):
            e = C.counit[t[i + 2]]
            return {t[:i + 2] + t[i + 3:]: e} if e else {}
        return space(n + 1).matrix(space(n), f)

    def cyc(n):
        def f(t):
            out = {}
            for (g, w), c in V.coaction[t[0]].items():
                for k, y in Cm.act.get((g, t[1]), {}).items():
                    key = (w,) + t[2:] + (k,)
                    out[key] = out.get(key, 0) + c * y
            return out
        return space(n).matrix(space(n), f)

    X = CocyclicModule(lambda n: V.dim * d ** (n + 1), coface, codeg, cyc,
                       "C(%s,%s)" % (C.name, V.name), order=None)
    return X


def cotriple_relations(ct, n):
    """span{h x - delta(h) x} in V (x) C^{(x)(n+1)} under the diagonal action."""
    Cm, V, H = ct.C, ct.V, ct.hopf
    sp = tspace((V.dim,) + (Cm.dim,) * (n + 1))
    mats = []
    for h in range(H.dim):
        legs = H.coproduct_n(h, n + 1)

        def f(t, legs=legs, h=h):
            out = {}
            for hs, c in legs.items():
                state = {(): c}
                for hi, ci in zip(hs, t[1:]):
                    img = Cm.act.get((hi, ci), {})
                    state = {k + (j,): x * y for k, x in state.items() for j, y in img.items()}
                    if not state:
                        break
                for k, x in state.items():
                    key = (t[0],) + k
                    out[key] = out.get(key, 0) + x
            if ct.delta[h]:
                out[t] = out.get(t, 0) - ct.delta[h]
            return out
        mats.append(sp.matrix(sp, f))
    return image(hstack(mats, sp.size))


def cotriple_cocyclic(ct, check=True):
    """Cocyclic module of delta-coinvariants (a quotient)."""
    if check:
        ok, why = ct.involution_report()
        if not ok:
            raise NotComatchedInInvolution(why)
    P = cotriple_paracocyclic(ct)
    rels = {}

    def rel(n):
        if n not in rels:
            rels[n] = cotriple_relations(ct, n)
        return rels[n]

    def induced(op, s, t):
        try:
            return on_quotient(op, rel(s), rel(t))
        except Inconsistent:
            raise OperatorEscapesSubspace("operator does not preserve the relations")

    size = lambda n: P.dim(n) - rel(n).dim
    X = CocyclicModule(size,
                       lambda n, i: induced(P.coface(n, i), n - 1, n),
                       lambda n, i: induced(P.codegeneracy(n, i), n + 1, n),
                       lambda n: induced(P.cyclic(n), n, n),
                       "C_H(%s,%s)" % (ct.C.coalgebra.name, ct.V.name))
    X.ambient = P
    X.relations = rel
    return X


def cotriple_to_cm(H, delta, n):
    """Phi(c0..cn) = Delta^{n-1}(S~ c0) . (c1 (x) ... (x) cn), from
    k (x) H^{(x)(n+1)} to H^{(x)n}."""
    St = twisted_antipode(H, delta)
    src = tspace((1,) + (H.dim,) * (n + 1))
    tgt = tspace((H.dim,) * n)

    def f(t):
        out = {}
        for x, c in St[t[1]].items():
            for legs, y in H.coproduct_n(x, n).items():
                state = {(): c * y}
                for a, b in zip(legs, t[2:]):
                    prod = H.mul_basis(a, b)
                    state = {k + (j,): u * v for k, u in state.items() for j, v in prod.items()}
                    if not state:
                        break
                for k, v in state.items():
                    out[k] = out.get(k, 0) + v
        return out
    return src.matrix(tgt, f)


def cm_identification_check(H, delta, sigma, max_n=3):
    """Phi kills the coinvariance relations, is onto, and intertwines the
    paracocyclic operators of the regular cotriple with the CM operators."""
    ct = regular_cotriple(H, delta, sigma)
    P = cotriple_paracocyclic(ct)
    CM = cm_cocyclic(H, delta, sigma)
    phi = {n: cotriple_to_cm(H, delta, n) for n in range(max_n + 2)}
    fails = []
    for n in range(max_n + 1):
        R = cotriple_relations(ct, n)
        if any(phi[n].apply(v) for v in R.vectors()):
            fails.append({"check": "relations", "degree": n})
        if rank(phi[n]) != H.dim ** n or P.dim(n) - R.dim != H.dim ** n:
            fails.append({"check": "bijective on the quotient", "degree": n})
        if n >= 1:
            for i in range(n + 1):
                if phi[n] @ P.coface(n, i) != CM.coface(n, i) @ phi[n - 1]:
                    fails.append({"check": "coface", "degree": n, "index": i})
        for i in range(n + 1):
            if phi[n] @ P.codegeneracy(n, i) != CM.codegeneracy(n, i) @ phi[n + 1]:
                fails.append({"check": "codegeneracy", "degree": n, "index": i})
        if phi[n] @ P.cyclic(n) != CM.cyclic(n) @ phi[n]:
            fails.append({"check": "cyclic", "degree": n})
    return Verdict.from_failures(fails)
