"""
Smash products A#H and the cylindrical module A-natural-H.

X_{p,q} = H^{(x)(p+1)} (x) A^{(x)(q+1)}, written (g_0..g_p | a_0..a_q).
The family (d, s, t) moves p and the family (delta, sigma, tau) moves q.
Iterated coproducts are numbered from 0: Delta^k(g) = g(0) (x) ... (x) g(k).

    >>> from .hopfcore import group_algebra, cyclic_group, truncated_polynomial
    >>> act = sign_action()
    >>> smash_product(act).dim
    4
"""

from itertools import product

from .exactla import SparseMatrix, rank, image, hstack, on_quotient, vclean, vadd_into, Inconsistent
from .hopfcore import (FiniteAlgebra, group_algebra, cyclic_group, truncated_polynomial,
                       sweedler_h4, integral_element, InvalidStructure, validate_algebra)
from .cyclicfw import (CylindricalModule, ParaCyclicModule, tspace, algebra_cyclic_module,
                       check_cylindrical, check_cyclic_axioms, Bimodule, hochschild_coeff_complex)
from .homengine import (cyclic_homology, hochschild_homology, mixed_cyclic_homology,
                        tot_of_cylindrical, mixed_total, filtered_pages)
from .hopfcyc import ModuleAlgebraAction, trivial_action
from .verdict import Verdict, first_mismatch


class SingularAntipode(ValueError):
    pass


def _sinv_table(H):
    try:
        return [H.Sinv_basis(i) for i in range(H.dim)]
    except InvalidStructure:
        raise SingularAntipode("antipode of %s is not invertible" % H.name)


def sign_action():
    """kZ/2 acting on k[x]/(x^2) by x -> -x."""
    H = group_algebra(cyclic_group(2))
    A = truncated_polynomial(2)
    return ModuleAlgebraAction(H, A, {(0, 0): {0: 1}, (0, 1): {1: 1},
                                      (1, 0): {0: 1}, (1, 1): {1: -1}})


def h4_action():
    """Sweedler's H4 acting on k[y]/(y^2): g y = -y, x y = 1."""
    H = sweedler_h4()
    A = truncated_polynomial(2)
    A.labels = ["1", "y"]
    return ModuleAlgebraAction(H, A, {(0, 0): {0: 1}, (0, 1): {1: 1},
                                      (1, 0): {0: 1}, (1, 1): {1: -1},
                                      (2, 1): {0: 1}, (3, 1): {0: 1}})


def translation_action(G):
    """kG acting on the function algebra k^G by (g f)(x) = f(x g)."""
    from .hopfcore import function_algebra
    H = group_algebra(G)
    A = function_algebra(G)
    act = {}
    for g in range(G.order):
        for x in range(G.order):
            # g . p_x = p_{x g^{-1}}
            act[(g, x)] = {G.mul(x, G.inv[g]): 1}
    return ModuleAlgebraAction(H, A, act)


def smash_product(action):
    """A#H with basis a*dim(H) + h and (a|g)(b|h) = a (g(1) b) | g(2) h."""
    H, A = action.hopf, action.algebra
    dH = H.dim
    mult = {}
    for a in range(A.dim):
        for g in range(dH):
            for b in range(A.dim):
                for h in range(dH):
                    out = {}
                    for (g1, g2), c in H.comult[g].items():
                        left = A.mul({a: 1}, action.act(g1, {b: 1}))
                        right = H.mul_basis(g2, h)
                        for u, x in left.items():
                            for v, y in right.items():
                                k = u * dH + v
                                out[k] = out.get(k, 0) + c * x * y
                    out = vclean(out)
                    if out:
                        mult[(a * dH + g, b * dH + h)] = out
    unit = {a * dH + h: x * y for a, x in A.unit.items() for h, y in H.unit.items()}
    labels = ["%s#%s" % (p, q) for p in A.labels for q in H.labels]
    S = FiniteAlgebra(A.dim * dH, mult, unit, labels, "%s#%s" % (A.name, H.name))
    S.action = action
    return S


# ---------------------------------------------------------------------------
# the cylindrical module

def cylindrical_smash(action, sinv=None):
    """A-natural-H.  ``sinv`` overrides the inverse antipode (negative controls)."""
    H, A = action.hopf, action.algebra
    dH, dA = H.dim, A.dim
    Si = sinv if sinv is not None else _sinv_table(H)
    unitA = list(A.unit.items())
    unitH = list(H.unit.items())
    actc = {}

    def act(h, a):
        key = (h, a)
        r = actc.get(key)
        if r is None:
            r = actc[key] = action.act(h, {a: 1})
        return r

    def act_elem(u, a):
        out = {}
        for h, x in u.items():
            vadd_into(out, act(h, a), x)
        return out

    def sp(p, q):
        return tspace((dH,) * (p + 1) + (dA,) * (q + 1))

    def split(gs):
        # {(P, seconds): c} with P = g0(0)...gp(0)
        state = {(k, ()): c for k, c in H.unit.items()}
        for g in gs:
            nxt = {}
            for (P, legs), c in state.items():
                for (a, b), x in H.comult[g].items():
                    for k, y in H.mul_basis(P, a).items():
                        key = (k, legs + (b,))
                        nxt[key] = nxt.get(key, 0) + c * x * y
            state = vclean(nxt)
        return state

    def twist_last(p, q, t, glue):
        gs, aa = t[:p + 1], t[p + 1:]
        out = {}
        for (P, legs), c in split(gs).items():
            moved = {}
            for s, x in Si[P].items():
                vadd_into(moved, act(s, aa[q]), x)
            if glue:
                moved = A.mul(moved, {aa[0]: 1})
                for k, y in moved.items():
                    key = legs + (k,) + aa[1:q]
                    out[key] = out.get(key, 0) + c * y
            else:
                for k, y in moved.items():
                    key = legs + (k,) + aa[:q]
                    out[key] = out.get(key, 0) + c * y
        return out

    def vface(p, q, i):
        if i < q:
            def f(t):
                j = p + 1 + i
                return {t[:j] + (k,) + t[j + 2:]: c for k, c in A.mul_basis(t[j], t[j + 1]).items()}
        else:
            f = lambda t: twist_last(p, q, t, True)
        return sp(p, q).matrix(sp(p, q - 1), f)

    def vdeg(p, q, i):
        j = p + 2 + i
        return sp(p, q).matrix(sp(p, q + 1), lambda t: {t[:j] + (u,) + t[j:]: c for u, c in unitA})

    def vcyc(p, q):
        return sp(p, q).matrix(sp(p, q), lambda t: twist_last(p, q, t, False))

    def spread(p, q, t, glue):
        gs, aa = t[:p + 1], t[p + 1:]
        out = {}
        for legs, c in H.coproduct_n(gs[p], q + 2).items():
            state = {(): c}
            for h, a in zip(legs[:-1], aa):
                img = act(h, a)
                state = {k + (j,): x * y for k, x in state.items() for j, y in img.items()}
                if not state:
                    break
            if not state:
                continue
            last = legs[-1]
            if glue:
                heads = H.mul_basis(last, gs[0])
                prefix = [((k,) + gs[1:p], y) for k, y in heads.items()]
            else:
                prefix = [((last,) + gs[:p], 1)]
            for pre, y in prefix:
                for k, x in state.items():
                    key = pre + k
                    out[key] = out.get(key, 0) + x * y
        return out

    def hface(p, q, i):
        if i < p:
            def f(t):
                return {t[:i] + (k,) + t[i + 2:]: c for k, c in H.mul_basis(t[i], t[i + 1]).items()}
        else:
            f = lambda t: spread(p, q, t, True)
        return sp(p, q).matrix(sp(p - 1, q), f)

    def hdeg(p, q, i):
        j = i + 1
        return sp(p, q).matrix(sp(p + 1, q), lambda t: {t[:j] + (u,) + t[j:]: c for u, c in unitH})

    def hcyc(p, q):
        return sp(p, q).matrix(sp(p, q), lambda t: spread(p, q, t, False))

    X = CylindricalModule(lambda p, q: dH ** (p + 1) * dA ** (q + 1),
                          hface, hdeg, hcyc, vface, vdeg, vcyc,
                          "%s nat %s" % (A.name, H.name))
    X.action = action
    return X


# ---------------------------------------------------------------------------
# diagonal versus (A#H)-natural

def _legs(H, g, k):
    return list(H.coproduct_n(g, k).items())


def phi_matrix(action, n, sinv=None):
    """(A#H)-natural_n -> X_{n,n}:
    (a_i|g_i) -> (g_0(1), g_1(2), .., g_n(n+1) | S^{-1}(g_i(0) g_{i+1}(1) .. g_n(n-i)) a_i)."""
    H, A = action.hopf, action.algebra
    dH, dA = H.dim, A.dim
    Si = sinv if sinv is not None else _sinv_table(H)
    src = tspace((dA * dH,) * (n + 1))
    tgt = tspace((dH,) * (n + 1) + (dA,) * (n + 1))

    def f(t):
        aa = [x // dH for x in t]
        gg = [x % dH for x in t]
        out = {}
        for combo in product(*[_legs(H, gg[j], j + 2) for j in range(n + 1)]):
            c = 1
            for _, x in combo:
                c *= x
            hs = tuple(combo[j][0][j + 1] for j in range(n + 1))
            state = {(): c}
            for i in range(n + 1):
                P = {u: 1 for u in H.unit}
                for j in range(i, n + 1):
                    P = H.mul(P, {combo[j][0][j - i]: 1})
                moved = {}
                for h, x in P.items():
                    for s, y in Si[h].items():
                        vadd_into(moved, action.act(s, {aa[i]: 1}), x * y)
                state = {k + (j,): x * y for k, x in state.items() for j, y in moved.items()}
                if not state:
                    break
            for k, x in state.items():
                out[hs + k] = out.get(hs + k, 0) + x
        return out
    return src.matrix(tgt, f)


def psi_matrix(action, n):
    """X_{n,n} -> (A#H)-natural_n:
    (g|a) -> ((g_i(i) ... g_n(i)) a_i | g_i(i+1))."""
    H, A = action.hopf, action.algebra
    dH, dA = H.dim, A.dim
    src = tspace((dH,) * (n + 1) + (dA,) * (n + 1))
    tgt = tspace((dA * dH,) * (n + 1))

    def f(t):
        gg, aa = t[:n + 1], t[n + 1:]
        out = {}
        for combo in product(*[_legs(H, gg[j], j + 2) for j in range(n + 1)]):
            c = 1
            for _, x in combo:
                c *= x
            state = {(): c}
            for i in range(n + 1):
                P = dict(H.unit)
                for j in range(i, n + 1):
                    P = H.mul(P, {combo[j][0][i]: 1})
                moved = action.act(P, {aa[i]: 1})
                h = combo[i][0][i + 1]
                state = {k + (a * dH + h,): x * y for k, x in state.items() for a, y in moved.items()}
                if not state:
                    break
            for k, x in state.items():
                out[k] = out.get(k, 0) + x
        return out
    return src.matrix(tgt, f)


def phi_psi_isomorphism(action, max_n=3, sinv=None):
    """phi psi = psi phi = id and phi intertwines the cyclic structures."""
    X = cylindrical_smash(action, sinv)
    D = X.diagonal()
    AH = algebra_cyclic_module(smash_product(action))
    fails = []
    phi = {n: phi_matrix(action, n, sinv) for n in range(max_n + 1)}
    for n in range(max_n + 1):
        psi = psi_matrix(action, n)
        size = AH.dim(n)
        if psi @ phi[n] != SparseMatrix.identity(size):
            fails.append({"check": "psi phi = id", "degree": n})
        if phi[n] @ psi != SparseMatrix.identity(size):
            fails.append({"check": "phi psi = id", "degree": n})
        if n >= 1:
            for i in range(n + 1):
                if phi[n - 1] @ AH.face(n, i) != D.face(n, i) @ phi[n]:
                    fails.append({"check": "face", "degree": n, "index": i})
        if n < max_n:
            for i in range(n + 1):
                if phi[n + 1] @ AH.degeneracy(n, i) != D.degeneracy(n, i) @ phi[n]:
                    fails.append({"check": "degeneracy", "degree": n, "index": i})
        if phi[n] @ AH.cyclic(n) != D.cyclic(n) @ phi[n]:
            fails.append({"check": "cyclic", "degree": n})
    return Verdict.from_failures(fails)


def ez_dimension_compare(action, max_n=3):
    """HC of the total mixed complex of A-natural-H against HC of A#H."""
    X = cylindrical_smash(action)
    left = mixed_cyclic_homology(tot_of_cylindrical(X), max_n).dims
    right = cyclic_homology(algebra_cyclic_module(smash_product(action)), max_n).dims
    w = first_mismatch(left, right)
    return Verdict(w is None, w, {"tot": left, "smash": right})


# ---------------------------------------------------------------------------
# the coinvariant row

def conjugation_row_action(action, n, h):
    """h.(g | a_0..a_n) = (h(n+1) g S^{-1}(h(n+2)) | h(0) a_0, .., h(n) a_n)."""
    H, A = action.hopf, action.algebra
    Si = _sinv_table(H)
    sp = tspace((H.dim,) + (A.dim,) * (n + 1))
    legs = H.coproduct_n(h, n + 3)

    def f(t):
        g, aa = t[0], t[1:]
        out = {}
        for hs, c in legs.items():
            state = {(): c}
            for hi, a in zip(hs[:n + 1], aa):
                img = action.act(hi, {a: 1})
                state = {k + (j,): x * y for k, x in state.items() for j, y in img.items()}
                if not state:
                    break
            if not state:
                continue
            conj = H.mul(H.mul_basis(hs[n + 1], g), Si[hs[n + 2]])
            for u, y in conj.items():
                for k, x in state.items():
                    key = (u,) + k
                    out[key] = out.get(key, 0) + x * y
        return out
    return sp.matrix(sp, f)


def row_relations(action, n):
    H = action.hopf
    mats = []
    for h in range(H.dim):
        m = conjugation_row_action(action, n, h)
        if H.counit[h]:
            m = m - SparseMatrix.identity(m.nrows).scale(H.counit[h])
        mats.append(m)
    return image(hstack(mats, mats[0].nrows))


def coinvariant_row(action):
    """Cyclic module of coinvariants of the row q -> X_{0,q}."""
    X = cylindrical_smash(action)
    col = X.column(0)
    rels = {}

    def rel(n):
        if n not in rels:
            rels[n] = row_relations(action, n)
        return rels[n]

    def induced(op, s, t):
        return on_quotient(op, rel(s), rel(t))

    M = ParaCyclicModule(lambda n: col.dim(n) - rel(n).dim,
                         lambda n, i: induced(col.face(n, i), n, n - 1),
                         lambda n, i: induced(col.degeneracy(n, i), n, n + 1),
                         lambda n: induced(col.cyclic(n), n, n),
                         "C^H(%s)" % action.algebra.name)
    M.relations = rel
    return M


def averaged_row_rank(action, n):
    """dim of coinvariants via a normalized integral element (if any)."""
    H = action.hopf
    L = integral_element(H)
    if L is None:
        return None
    m = None
    for h, x in L.items():
        t = conjugation_row_action(action, n, h).scale(x)
        m = t if m is None else m + t
    return rank(m)


# ---------------------------------------------------------------------------
# beta / gamma and the spectral sequence

def row_module(action, q):
    """C_q(A-natural_H) = H (x) A^{(x)(q+1)} as an H-bimodule: conjugation
    on the left, counit on the right."""
    H = action.hopf
    mats = [conjugation_row_action(action, q, h) for h in range(H.dim)]
    size = mats[0].nrows
    left = {}
    for h, m in enumerate(mats):
        for j, col in m.cols.items():
            left[(h, j)] = dict(col)
    right = {(m, h): {m: H.counit[h]} for m in range(size) for h in range(H.dim) if H.counit[h]}
    return Bimodule(H, size, left, right, "C_%d" % q)


def beta_matrix(action, p, q):
    """(g_0..g_p | a) -> (g_0 g_1(1)...g_p(1) | a) (x) (g_1(0), .., g_p(0)),
    laid out as the Hochschild complex C_p(H, C_q): module slot first."""
    H, A = action.hopf, action.algebra
    src = tspace((H.dim,) * (p + 1) + (A.dim,) * (q + 1))
    mod = tspace((H.dim,) + (A.dim,) * (q + 1))
    tgt = tspace((mod.size,) + (H.dim,) * p)

    def f(t):
        gs, aa = t[:p + 1], t[p + 1:]
        state = {(gs[0], ()): 1}
        for g in gs[1:]:
            nxt = {}
            for (P, firsts), c in state.items():
                for (a, b), x in H.comult[g].items():
                    for k, y in H.mul_basis(P, b).items():
                        key = (k, firsts + (a,))
                        nxt[key] = nxt.get(key, 0) + c * x * y
            state = vclean(nxt)
        return {(mod.index((P,) + aa),) + firsts: c for (P, firsts), c in state.items()}
    return src.matrix(tgt, f)


def gamma_matrix(action, p, q):
    """(g | a) (x) (g_1..g_p) -> (g S^{-1}(g_1(1)...g_p(1)), g_1(0), .., g_p(0) | a)."""
    H, A = action.hopf, action.algebra
    Si = _sinv_table(H)
    mod = tspace((H.dim,) + (A.dim,) * (q + 1))
    src = tspace((mod.size,) + (H.dim,) * p)
    tgt = tspace((H.dim,) * (p + 1) + (A.dim,) * (q + 1))
    tuples = mod.tuples()

    def f(t):
        g, aa = tuples[t[0]][0], tuples[t[0]][1:]
        state = {(k, ()): c for k, c in H.unit.items()}
        for h in t[1:]:
            nxt = {}
            for (P, firsts), c in state.items():
                for (a, b), x in H.comult[h].items():
                    for k, y in H.mul_basis(P, b).items():
                        key = (k, firsts + (a,))
                        nxt[key] = nxt.get(key, 0) + c * x * y
            state = vclean(nxt)
        out = {}
        for (P, firsts), c in state.items():
            for k, y in H.mul({g: 1}, Si[P]).items():
                key = (k,) + firsts + aa
                out[key] = out.get(key, 0) + c * y
        return out
    return src.matrix(tgt, f)


def beta_gamma_check(action, max_p=2, max_q=2):
    fails = []
    for p in range(max_p + 1):
        for q in range(max_q + 1):
            b, g = beta_matrix(action, p, q), gamma_matrix(action, p, q)
            n = b.ncols
            if g @ b != SparseMatrix.identity(n) or b @ g != SparseMatrix.identity(n):
                fails.append({"bidegree": (p, q)})
    return Verdict.from_failures(fails)


def beta_intertwines(action, max_p=2, max_q=1):
    """beta carries the p-direction faces to those of C_p(H, C_q)."""
    X = cylindrical_smash(action)
    fails = []
    for q in range(max_q + 1):
        C = hochschild_coeff_complex(action.hopf, row_module(action, q))
        for p in range(1, max_p + 1):
            for i in range(p + 1):
                if beta_matrix(action, p - 1, q) @ X.hface(p, q, i) != C.face(p, i) @ beta_matrix(action, p, q):
                    fails.append({"bidegree": (p, q), "face": i})
    return Verdict.from_failures(fails)


def spectral_sequence(action, max_total=3, max_r=None):
    """Pages of the filtration of the (b, B) complex of the normalized
    Tot(A-natural-H) by L = q + 2k (q the A-degree, k the power of u).  In
    total degree n this is L = n - p, and the associated graded
    differential is b in the p-direction."""
    from .homengine import chain_homology
    X = cylindrical_smash(action)
    C = tot_of_cylindrical(X)
    top = max_total + 1
    size = C.bidims

    def dims(n):
        return sum(C.dims(n - 2 * k) for k in range(n // 2 + 1))

    def filt(n):
        out = []
        for k in range(n // 2 + 1):
            m = n - 2 * k
            for p in range(m + 1):
                out.extend([n - p] * size(p, m - p))
        return out

    if max_r is None:
        max_r = top + 2
    pages = filtered_pages(dims, lambda n: mixed_total(C, n), filt, top, max_r)
    hc = cyclic_homology(algebra_cyclic_module(smash_product(action)), max_total).dims

    def totals(r):
        return {n: sum(v for (s, m), v in pages[r].items() if m == n) for n in range(max_total + 1)}

    e2, einf = totals(2), totals(max_r)
    # E^1 predicted from the homology of the normalized rows
    rowh = {}
    for q in range(top + 1):
        h = chain_homology(lambda p, q=q: size(p, q),
                           lambda p, q=q: C.hblock(p, q) if p >= 1 else SparseMatrix(0, size(0, q)),
                           top - q)
        for p, v in h.items():
            rowh[(p, q)] = v
    e1_pred = {}
    for (s, n) in pages[1]:
        p = n - s
        e1_pred[(s, n)] = sum(rowh.get((p, q), 0) for q in range(s, -1, -2))
    # the rows against H_p(H, C_q) with conjugation on the left, counit on the right
    rows_hh, hoch = {}, {}
    for q in range(max_total + 1):
        hh = hochschild_homology(X.row(q), max_total - q).dims
        ref = hochschild_homology(hochschild_coeff_complex(action.hopf, row_module(action, q)),
                                  max_total - q).dims
        for p in range(max_total - q + 1):
            rows_hh[(p, q)] = hh[p]
            hoch[(p, q)] = ref[p]
    fails = []
    for n in range(max_total + 1):
        if e2[n] < hc[n]:
            fails.append({"check": "E2 total >= HC", "degree": n})
        if einf[n] != hc[n]:
            fails.append({"check": "E-infinity total = HC", "degree": n})
    if e1_pred != pages[1]:
        fails.append({"check": "E1 = row homology", "entry": first_mismatch(e1_pred, pages[1])})
    if rows_hh != hoch:
        fails.append({"check": "row homology = H_p(H, C_q)", "entry": first_mismatch(rows_hh, hoch)})
    bg = beta_gamma_check(action, min(2, max_total), min(2, max_total))
    if not bg:
        fails.append({"check": "beta gamma", "entry": bg.witness})
    details = {"pages": {r: {k: v for k, v in pages[r].items() if k[1] <= max_total} for r in pages},
               "E2_total": e2, "Einf_total": einf, "HC": hc, "H_p(H,C_q)": hoch}
    return Verdict.from_failures(fails, **details)
