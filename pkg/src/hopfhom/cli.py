"""
Command-line front end.

    hopfhom validate SPEC
    hopfhom homology SPEC --theory hc --construction kr --max-degree 4
    hopfhom check ID [SPEC] [--delta NAME] [--sigma NAME] [--q Q]
    hopfhom list-checks

Reports are canonical JSON (sorted keys, UTF-8, LF).  Exit codes: 0 pass,
1 check or validation failure, 2 usage or schema error.
"""

import argparse
import hashlib
import json
import logging
import os
import sys
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import __version__
from .exactla import SparseMatrix, fmt_scalar, qq
from .hopfcore import HopfAlgebra, FiniteAlgebra, NotInvolutive, validate_algebra, validate_hopf
from .extalg import NotAGroupoid
from .verdict import Verdict, PreconditionError, first_mismatch
from .specfile import (SchemaError, ValidationFailure, UnknownCharacter, read_spec, spec_hash,
                       named_characters, named_grouplikes, resolve_character, resolve_grouplike)

log = logging.getLogger("hopfhom")


class UnknownCheck(KeyError):
    pass


class Inapplicable(ValueError):
    pass


class IncompatibleConstruction(ValueError):
    pass


# ---------------------------------------------------------------------------
# JSON helpers

def jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return fmt_scalar(x)
    if isinstance(x, dict):
        return {_key(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x, key=repr) if isinstance(x, (set, frozenset)) else x
        return [jsonable(v) for v in items]
    return str(x)


def _key(k):
    if isinstance(k, str):
        return k
    if isinstance(k, tuple):
        return ",".join(str(jsonable(v)) for v in k)
    return str(jsonable(k))


def canonical(obj):
    return json.dumps(jsonable(obj), sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def finish_report(rep):
    rep["tool-version"] = __version__
    body = dict(rep)
    body.pop("content-hash", None)
    rep["content-hash"] = hashlib.sha256(canonical(body).encode("utf-8")).hexdigest()
    return rep


def _emit(rep, out=None):
    text = canonical(finish_report(rep))
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return text


# ---------------------------------------------------------------------------
# operator cache

class MatrixCache:
    """Operator matrices on disk under ``root/scope/<op>-<degree>-<index>.json``.

    Entries carry a checksum; unreadable or mismatching entries are
    recomputed and overwritten.  Writes go through a temporary file and
    ``os.replace``, so concurrent writers of the same key are harmless."""

    def __init__(self, root, scope):
        self.dir = Path(root) / scope
        self.hits = 0
        self.misses = 0
        self.repaired = 0

    @staticmethod
    def encode(m):
        cols = [[j, [[i, fmt_scalar(x)] for i, x in sorted(col.items())]]
                for j, col in sorted(m.cols.items())]
        body = {"nrows": m.nrows, "ncols": m.ncols, "cols": cols}
        blob = json.dumps(body, sort_keys=True, separators=(",", ":"))
        return {"matrix": body, "sha256": hashlib.sha256(blob.encode()).hexdigest()}

    @staticmethod
    def decode(doc):
        body = doc["matrix"]
        blob = json.dumps(body, sort_keys=True, separators=(",", ":"))
        if hashlib.sha256(blob.encode()).hexdigest() != doc["sha256"]:
            raise ValueError("checksum mismatch")
        cols = {j: {i: qq(x) for i, x in col} for j, col in body["cols"]}
        return SparseMatrix(body["nrows"], body["ncols"], cols)

    def path(self, key):
        return self.dir / ("-".join(str(k) for k in key) + ".json")

    def fetch(self, module, key, make):
        p = self.path(key)
        if p.exists():
            try:
                with open(p, encoding="utf-8") as fh:
                    m = self.decode(json.load(fh))
                self.hits += 1
                return m
            except (ValueError, KeyError, TypeError) as e:
                log.warning("corrupt cache entry %s (%s); recomputing", p, e)
                self.repaired += 1
        self.misses += 1
        m = make()
        self.dir.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.dir, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(self.encode(m), fh, sort_keys=True)
        os.replace(tmp, p)
        return m


def cache_root():
    return os.environ.get("HOPFHOM_CACHE_DIR", "./.hopfhom-cache")


def cache_scope(shash, construction, params):
    blob = json.dumps([shash, construction, jsonable(params)], sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()[:32]


# ---------------------------------------------------------------------------
# parameters

@dataclass
class Ctx:
    obj: object = None
    doc: dict = None
    delta: str = None
    sigma: str = None
    max_degree: int = None
    q: str = None
    size: int = 2
    variant: str = "corrected"

    def cutoff(self, default):
        return default if self.max_degree is None else self.max_degree

    def qval(self):
        return qq(self.q) if self.q is not None else 2


def _hopf(ctx):
    if not isinstance(ctx.obj, HopfAlgebra):
        raise Inapplicable("this check needs a Hopf algebra spec")
    return ctx.obj


def _pair(H, ctx):
    dn, dv = resolve_character(H, ctx.delta)
    sn, sv = resolve_grouplike(H, ctx.sigma)
    return (dn, dv), (sn, sv)


def _action(ctx):
    from .smash import sign_action
    from .hopfcyc import ModuleAlgebraAction
    if ctx.obj is None:
        return sign_action()
    if not isinstance(ctx.obj, ModuleAlgebraAction):
        raise Inapplicable("this check needs a module_algebra spec")
    bad = ctx.obj.violations()
    if bad:
        raise Inapplicable("not a module algebra: %s" % (bad[0],))
    return ctx.obj


def _groupoid_bialgebroid(ctx):
    from .extalg import FiniteGroupoid, groupoid_extended_hopf
    if not isinstance(ctx.obj, FiniteGroupoid):
        raise Inapplicable("this check needs a groupoid spec")
    ctx.obj.validate()
    return groupoid_extended_hopf(ctx.obj)


def _axioms(M, n, **details):
    from .cyclicfw import check_cyclic_axioms
    return Verdict.from_failures(check_cyclic_axioms(M, n), **details)


# ---------------------------------------------------------------------------
# the check catalog

def chk_kr_cyclic(ctx):
    from .hopfcore import NotInvolutive
    from .hopfcyc import kr_cyclic, kr_matches_hochschild
    from .cyclicfw import check_cyclic_axioms
    H = _hopf(ctx)
    (dn, d), (sn, s) = _pair(H, ctx)
    n = ctx.cutoff(4)
    try:
        M = kr_cyclic(H, d, s)
    except NotInvolutive as e:
        raw = check_cyclic_axioms(kr_cyclic(H, d, s, check=False), n)
        return Verdict(False, {"condition": "modular pair in involution", "reason": str(e)},
                       {"axiom_failures_without_involution": len(raw)})
    fails = check_cyclic_axioms(M, n)
    hoch = kr_matches_hochschild(H, d, n)
    if not hoch:
        fails.append({"condition": "simplicial part = Hochschild complex", "entry": hoch.witness})
    return Verdict.from_failures(fails, delta=dn, sigma=sn)


def chk_cocommutative(ctx):
    from .hopfcyc import cocommutative_decomposition_check
    H = _hopf(ctx)
    if not H.is_cocommutative():
        raise Inapplicable("%s is not cocommutative" % H.name)
    (dn, d), _ = _pair(H, ctx)
    return cocommutative_decomposition_check(H, d, ctx.cutoff(4))


def chk_commutative(ctx):
    from .hopfcyc import commutative_decomposition_check
    return commutative_decomposition_check(_hopf(ctx), ctx.cutoff(4))


def chk_haar_hp(ctx):
    from .hopfcyc import haar_hp_check
    return haar_hp_check(_hopf(ctx), ctx.cutoff(4))


def chk_char_map_cm(ctx):
    from .hopfcyc import characteristic_map_cm, InvariantTrace
    act = _action(ctx)
    tr = getattr(act, "trace", None) or [1] + [0] * (act.algebra.dim - 1)
    (dn, d), (sn, s) = _pair(act.hopf, ctx)
    _, v = characteristic_map_cm(act, InvariantTrace(tr, "cm"), d, s, ctx.cutoff(3), strict=False)
    bad = v.details.get("trace_violations")
    if bad:
        return Verdict(False, {"condition": "invariant trace", "entry": bad[0]}, v.details)
    return v


def chk_char_map_kr(ctx):
    from .hopfcyc import characteristic_map_kr, InvariantTrace, regular_coaction
    H = _hopf(ctx)
    tr = (ctx.doc or {}).get("trace")
    if tr is not None:
        from .specfile import scalar
        tr = [scalar(x, "spec/trace") for x in tr]
    elif getattr(H, "group", None) is not None and H.name.startswith("k") and H.is_cocommutative():
        tr = [1 if g == H.group.identity else 0 for g in range(H.dim)]
    else:
        raise Inapplicable("no trace given and H is not a group algebra")
    (dn, d), (sn, s) = _pair(H, ctx)
    _, v = characteristic_map_kr(regular_coaction(H, "right"), InvariantTrace(tr, "kr"), d, s,
                                 ctx.cutoff(3), strict=False)
    bad = v.details.get("trace_violations")
    if bad:
        return Verdict(False, {"condition": "delta-trace, sigma-invariant", "entry": bad[0]}, v.details)
    return v


def chk_connes(ctx):
    from .hopfcore import matrix_algebra
    from .hopfcyc import connes_2cocycle, inner_derivation
    n = 3
    A = matrix_algebra(n)
    u = {i * n + i: i + 1 for i in range(n)}
    v = {i * n + i: (i + 1) ** 2 for i in range(n)}
    tr = [1 if i % (n + 1) == 0 else 0 for i in range(n * n)]
    phi, verdict = connes_2cocycle(A, inner_derivation(A, u), inner_derivation(A, v), tr)
    verdict.details["nonzero_entries"] = len(phi)
    return verdict


def chk_group_cocycle(ctx):
    from .hopfcyc import group_cocycle_to_cyclic, group_cochain_coboundary
    H = _hopf(ctx)
    G = getattr(H, "group", None)
    if G is None or not H.is_cocommutative():
        raise Inapplicable("this check needs a group_algebra spec")
    # an odd f gives a cyclic cocycle; when every element is an involution
    # the odd part vanishes and the plain index is used instead
    f = {(g,): g - G.inv[g] for g in range(G.order) if g != G.inv[g]}
    used = "f(g) = index(g) - index(g^-1)"
    if not f:
        f = {(g,): g for g in range(G.order) if g != G.identity}
        used = "f(g) = index(g)"
    c = group_cochain_coboundary(G, f, 1)
    _, v = group_cocycle_to_cyclic(G, c, 2)
    v.details["cochain"] = "coboundary of " + used
    return v


def chk_extended(ctx):
    from .extalg import extended_axioms, tensor_count_check
    B = _groupoid_bialgebroid(ctx)
    v = extended_axioms(B, ctx.cutoff(3))
    t = tensor_count_check(B, ctx.cutoff(3))
    if v and not t:
        return Verdict(False, t.witness, dict(v.details, **t.details))
    v.details.update(t.details)
    return v


def chk_haar_system(ctx):
    from .extalg import haar_system_report
    return haar_system_report(_groupoid_bialgebroid(ctx))


def chk_hc_parity(ctx):
    from .extalg import hc_parity_check
    return hc_parity_check(_groupoid_bialgebroid(ctx), ctx.cutoff(3))


def chk_probe(ctx):
    from .extalg import conjecture_probe
    return conjecture_probe(_groupoid_bialgebroid(ctx), ctx.cutoff(3))


def chk_smash_cyl(ctx):
    from .smash import cylindrical_smash
    from .cyclicfw import check_cylindrical
    return Verdict.from_failures(check_cylindrical(cylindrical_smash(_action(ctx)), ctx.cutoff(3)))


def chk_smash_iso(ctx):
    from .smash import phi_psi_isomorphism
    return phi_psi_isomorphism(_action(ctx), ctx.cutoff(3))


def chk_smash_tot(ctx):
    from .smash import ez_dimension_compare
    return ez_dimension_compare(_action(ctx), ctx.cutoff(3))


def chk_smash_row(ctx):
    from .smash import coinvariant_row
    M = coinvariant_row(_action(ctx))
    n = ctx.cutoff(3)
    return _axioms(M, n, dims={k: M.dim(k) for k in range(n + 1)})


def chk_smash_ss(ctx):
    from .smash import spectral_sequence
    return spectral_sequence(_action(ctx), ctx.cutoff(3))


def chk_triple(ctx):
    from .invariant import regular_triple, coinvariant_subcomplex
    H = _hopf(ctx)
    (dn, d), (sn, s) = _pair(H, ctx)
    M = coinvariant_subcomplex(regular_triple(H, d, s))
    n = ctx.cutoff(3)
    return _axioms(M, n, dims={k: M.dim(k) for k in range(n + 1)})


def chk_triple_kr(ctx):
    from .invariant import kr_identification_check
    H = _hopf(ctx)
    (dn, d), (sn, s) = _pair(H, ctx)
    return kr_identification_check(H, d, s, ctx.cutoff(3))


def chk_morita(ctx):
    from .invariant import regular_triple, morita_compare
    H = _hopf(ctx)
    (dn, d), (sn, s) = _pair(H, ctx)
    return morita_compare(regular_triple(H, d, s), ctx.size, ctx.cutoff(2))


def chk_cotriple(ctx):
    from .invariant import regular_cotriple, cotriple_cocyclic
    H = _hopf(ctx)
    (dn, d), (sn, s) = _pair(H, ctx)
    X = cotriple_cocyclic(regular_cotriple(H, d, s))
    n = ctx.cutoff(3)
    return _axioms(X, n, dims={k: X.dim(k) for k in range(n + 1)})


def chk_cotriple_cm(ctx):
    from .invariant import cm_identification_check
    H = _hopf(ctx)
    (dn, d), (sn, s) = _pair(H, ctx)
    return cm_identification_check(H, d, s, ctx.cutoff(3))


def chk_uq_resolution(ctx):
    from .qpbw import dd_check
    return dd_check(ctx.qval(), ctx.variant)


def chk_uq_homotopy(ctx):
    from .qpbw import homotopy_check
    return homotopy_check(ctx.qval(), variant=ctx.variant)


def chk_uq_tor(ctx):
    from .qpbw import collapsed_tor, euler_characteristic
    n = ctx.cutoff(4)
    tor = collapsed_tor(ctx.qval(), n, ctx.variant)
    want = {k: 1 if k == 0 else 0 for k in range(n + 1)}
    w = first_mismatch(tor.dims, want)
    return Verdict(w is None, w, {"tor": tor.dims, "euler_characteristic": euler_characteristic()})


def chk_uq_inference(ctx):
    from .qpbw import collapsed_tor, hc_inference, PreconditionNotMet
    tor = collapsed_tor(ctx.qval(), ctx.cutoff(4), ctx.variant)
    try:
        out = hc_inference(tor)
    except PreconditionNotMet as e:
        return Verdict(False, {"condition": "HH = (k, 0, 0, ...)", "reason": str(e)}, {"tor": tor.dims})
    return Verdict(True, None, out)


@dataclass
class Check:
    id: str
    needs: str
    run: object
    summary: str


CHECKS = [Check(*c) for c in [
    ("kr-cyclic-module", "hopf", chk_kr_cyclic,
     "KR module is cyclic exactly for a modular pair in involution; simplicial part is C(H, k_delta)"),
    ("cocommutative-decomposition", "hopf", chk_cocommutative,
     "HC of the KR module = sum of H_{n-2i}(H, k_delta) for cocommutative H"),
    ("commutative-decomposition", "hopf", chk_commutative,
     "HP of the CM module = parity sums of coalgebra cohomology for commutative H"),
    ("haar-periodic", "hopf", chk_haar_hp,
     "with a normalized Haar integral, HC of the CM module is k in even and 0 in odd degrees"),
    ("char-map-cm", "module_algebra?", chk_char_map_cm,
     "characteristic map from an invariant trace commutes with all cocyclic operators"),
    ("char-map-kr", "hopf", chk_char_map_kr,
     "characteristic map from a delta-trace commutes with all cyclic operators"),
    ("connes-2-cocycle", "none", chk_connes,
     "tr(a0 (d1 a1 d2 a2 - d2 a1 d1 a2)) on M3(Q) is a cyclic 2-cocycle"),
    ("group-cocycle", "hopf", chk_group_cocycle,
     "a group 2-coboundary gives a cyclic cocycle on kG"),
    ("extended-cocyclic", "groupoid", chk_extended,
     "groupoid extended Hopf algebra gives a cocyclic module; tensor counts match"),
    ("haar-system", "groupoid", chk_haar_system,
     "normal left Haar system exists and is the indicator of identities"),
    ("hc-parity", "groupoid", chk_hc_parity,
     "HC odd = 0 and HC even = ker(alpha - beta)"),
    ("commutative-extended-probe", "groupoid", chk_probe,
     "HC^n against sum of H^{n-2i}(H, R) in low degrees (probe)"),
    ("smash-cylindrical", "module_algebra?", chk_smash_cyl,
     "A-natural-H satisfies the cylindrical identities"),
    ("smash-diagonal-iso", "module_algebra?", chk_smash_iso,
     "diagonal of A-natural-H is isomorphic to (A#H)-natural"),
    ("smash-tot-hc", "module_algebra?", chk_smash_tot,
     "HC of Tot(A-natural-H) = HC of A#H"),
    ("smash-coinvariant-row", "module_algebra?", chk_smash_row,
     "coinvariant row module is cyclic"),
    ("smash-spectral-sequence", "module_algebra?", chk_smash_ss,
     "spectral sequence of the row filtration: E1 rows and convergence to HC"),
    ("triple-coinvariant-cyclic", "hopf", chk_triple,
     "sigma-coinvariants of the regular Hopf triple form a cyclic module"),
    ("triple-kr-identification", "hopf", chk_triple_kr,
     "regular triple coinvariants = KR module, operator by operator"),
    ("morita", "hopf", chk_morita,
     "invariant HC of (A, H, M) = that of (M_k(A), H, M)"),
    ("cotriple-cocyclic", "hopf", chk_cotriple,
     "coinvariant quotient of the regular Hopf cotriple is cocyclic"),
    ("cotriple-cm-identification", "hopf", chk_cotriple_cm,
     "regular cotriple quotient = CM module, operator by operator"),
    ("uq-resolution", "none", chk_uq_resolution,
     "d o d = 0 on the free generators of the U_q(sl2) resolution"),
    ("uq-homotopy", "none", chk_uq_homotopy,
     "sd + ds = id on the PBW sweep |l| <= 2, m, n <= 3"),
    ("uq-tor", "none", chk_uq_tor,
     "collapsed Tor of U_q(sl2) is (k, 0, 0, 0)"),
    ("uq-cyclic-inference", "none", chk_uq_inference,
     "HC of U_q(sl2) is k in even and 0 in odd degrees, inferred from Tor"),
]]
CATALOG = {c.id: c for c in CHECKS}


def run_check(check_id, ctx):
    """Verdict for a catalog entry; raises UnknownCheck or Inapplicable."""
    from .extalg import NotAGroupoid
    c = CATALOG.get(check_id)
    if c is None:
        raise UnknownCheck(check_id)
    if c.needs in ("hopf", "groupoid") and ctx.obj is None:
        raise Inapplicable("check %s needs a spec file" % check_id)
    try:
        return c.run(ctx)
    except (PreconditionError, NotAGroupoid) as e:
        raise Inapplicable("%s: %s" % (type(e).__name__, e))


def verdict_entry(check_id, v):
    return {"id": check_id, "verdict": "pass" if v.ok else "fail", "witness": v.witness}


# ---------------------------------------------------------------------------
# homology

CONSTRUCTIONS = ["cm", "kr", "algebra", "coalgebra", "extended", "triple", "cotriple",
                 "smash-diagonal"]


def build_module(obj, construction, ctx):
    """(module, parameters) for a construction on a loaded spec object."""
    from .hopfcyc import cm_cocyclic, kr_cyclic, ModuleAlgebraAction
    from .cyclicfw import algebra_cyclic_module, coalgebra_cocyclic_module
    from .extalg import FiniteGroupoid, groupoid_extended_hopf, extended_cocyclic
    from .invariant import regular_triple, coinvariant_subcomplex, regular_cotriple, cotriple_cocyclic
    from .smash import cylindrical_smash
    params = {"construction": construction}
    if construction in ("cm", "kr", "triple", "cotriple"):
        if not isinstance(obj, HopfAlgebra):
            raise IncompatibleConstruction("%s needs a Hopf algebra" % construction)
        (dn, d), (sn, s) = _pair(obj, ctx)
        params.update(delta=dn, delta_values=d, sigma=sn, sigma_vector=s)
        make = {"cm": lambda: cm_cocyclic(obj, d, s),
                "kr": lambda: kr_cyclic(obj, d, s),
                "triple": lambda: coinvariant_subcomplex(regular_triple(obj, d, s)),
                "cotriple": lambda: cotriple_cocyclic(regular_cotriple(obj, d, s))}[construction]
        return make(), params
    if construction == "algebra":
        if isinstance(obj, ModuleAlgebraAction) or not isinstance(obj, FiniteAlgebra):
            raise IncompatibleConstruction("algebra needs an algebra spec")
        return algebra_cyclic_module(obj), params
    if construction == "coalgebra":
        if not isinstance(obj, HopfAlgebra):
            raise IncompatibleConstruction("coalgebra needs a Hopf algebra (or coalgebra) spec")
        return coalgebra_cocyclic_module(obj), params
    if construction == "extended":
        if not isinstance(obj, FiniteGroupoid):
            raise IncompatibleConstruction("extended needs a groupoid spec")
        obj.validate()
        return extended_cocyclic(groupoid_extended_hopf(obj)), params
    if construction == "smash-diagonal":
        if not isinstance(obj, ModuleAlgebraAction):
            raise IncompatibleConstruction("smash-diagonal needs a module_algebra spec")
        return cylindrical_smash(obj).diagonal(), params
    raise IncompatibleConstruction("unknown construction %r" % construction)


def homology_report(path, theory, construction, ctx, use_cache=True):
    from .homengine import hochschild_homology, cyclic_homology, periodic_estimate
    doc, obj = read_spec(path)
    M, params = build_module(obj, construction, ctx)
    shash = spec_hash(doc)
    cache = None
    if use_cache:
        cache = MatrixCache(cache_root(), cache_scope(shash, construction, params))
        M.cache = cache
    n = ctx.cutoff(3 if construction in ("smash-diagonal", "triple", "cotriple") else 4)
    stabilized = {}
    if theory == "hh":
        rep = hochschild_homology(M, n)
    elif theory == "hc":
        rep = cyclic_homology(M, n)
    else:
        hc = cyclic_homology(M, n)
        rep = periodic_estimate(hc)
        stabilized = {"even": rep.stabilized[0], "odd": rep.stabilized[1]}
        params["HC"] = [{"n": k, "dim": hc.dims[k]} for k in sorted(hc.dims)]
    params["cutoff"] = n
    params["cohomological"] = bool(rep.cohomological)
    if ctx.q is not None:
        params["q"] = str(ctx.qval())
    out = {"object-id": doc.get("name") or "%s-%s" % (doc["kind"], shash[:12]),
           "theory": theory,
           "parameters": params,
           "degrees": [{"n": k, "dim": rep.dims[k]} for k in sorted(rep.dims)],
           "stabilized": stabilized,
           "checks": []}
    return out, cache


# ---------------------------------------------------------------------------
# validate

def validation_checks(obj):
    from .extalg import FiniteGroupoid, NotAGroupoid, groupoid_extended_hopf, bialgebroid_report
    from .hopfcyc import ModuleAlgebraAction

    def entry(cid, fails):
        w = None
        if fails:
            w = {"axiom": fails[0][0], "indices": fails[0][1]} if isinstance(fails[0], tuple) else fails[0]
        return {"id": cid, "verdict": "fail" if fails else "pass", "witness": w}

    if isinstance(obj, FiniteGroupoid):
        try:
            obj.validate()
        except NotAGroupoid as e:
            return [entry("groupoid", [{"reason": str(e)}])]
        v = bialgebroid_report(groupoid_extended_hopf(obj))
        return [entry("groupoid", []), {"id": "bialgebroid", "verdict": "pass" if v else "fail",
                                        "witness": v.witness}]
    if isinstance(obj, ModuleAlgebraAction):
        return [entry("hopf", validate_hopf(obj.hopf)),
                entry("algebra", validate_algebra(obj.algebra)),
                entry("module-algebra", [("action", b) for b in obj.violations()])]
    if isinstance(obj, HopfAlgebra):
        return [entry("hopf", validate_hopf(obj))]
    return [entry("algebra", validate_algebra(obj))]


def structure_parameters(obj):
    if not isinstance(obj, HopfAlgebra):
        return {}
    ok = not validate_hopf(obj)
    if not ok:
        return {}
    return {"characters": {n: v for n, v in named_characters(obj)},
            "grouplikes": {n: v for n, v in named_grouplikes(obj)}}


# ---------------------------------------------------------------------------
# commands

def _ctx(args, obj=None, doc=None):
    return Ctx(obj=obj, doc=doc, delta=getattr(args, "delta", None),
               sigma=getattr(args, "sigma", None), max_degree=getattr(args, "max_degree", None),
               q=getattr(args, "q", None), size=getattr(args, "size", 2),
               variant=getattr(args, "variant", "corrected"))


def cmd_validate(args):
    try:
        doc, obj = read_spec(args.spec)
    except ValidationFailure as e:
        rep = {"object-id": args.spec, "theory": "validate", "parameters": {}, "degrees": [],
               "stabilized": {}, "checks": [{"id": "structure", "verdict": "fail", "witness": e.witness}]}
        _emit(rep, args.out)
        return 1
    checks = validation_checks(obj)
    rep = {"object-id": doc.get("name") or "%s-%s" % (doc["kind"], spec_hash(doc)[:12]),
           "theory": "validate", "parameters": structure_parameters(obj) if all(
               c["verdict"] == "pass" for c in checks) else {},
           "degrees": [], "stabilized": {}, "checks": checks}
    _emit(rep, args.out)
    return 0 if all(c["verdict"] == "pass" for c in checks) else 1


def cmd_homology(args):
    ctx = _ctx(args)
    rep, cache = homology_report(args.spec, args.theory, args.construction, ctx,
                                 use_cache=not args.no_cache)
    _emit(rep, args.out)
    if cache is not None:
        log.info("cache: %d hits, %d misses, %d repaired", cache.hits, cache.misses, cache.repaired)
    return 0


def cmd_check(args):
    doc = obj = None
    if args.spec:
        doc, obj = read_spec(args.spec)
    ctx = _ctx(args, obj, doc)
    params = {k: v for k, v in [("delta", ctx.delta), ("sigma", ctx.sigma), ("q", ctx.q),
                                ("cutoff", ctx.max_degree), ("variant", ctx.variant)] if v is not None}
    oid = (doc.get("name") or "%s-%s" % (doc["kind"], spec_hash(doc)[:12])) if doc else "builtin"
    rep = {"object-id": oid, "theory": "check", "parameters": params, "degrees": [],
           "stabilized": {}}
    try:
        v = run_check(args.check_id, ctx)
    except Inapplicable as e:
        rep["checks"] = [{"id": args.check_id, "verdict": "skipped", "witness": {"reason": str(e)}}]
        _emit(rep, args.out)
        return 2
    rep["checks"] = [verdict_entry(args.check_id, v)]
    rep["details"] = v.details
    _emit(rep, args.out)
    return 0 if v.ok else 1


def cmd_list_checks(args):
    for c in CHECKS:
        sys.stdout.write("%-28s %-16s %s\n" % (c.id, c.needs, c.summary))
    return 0


def parser():
    p = argparse.ArgumentParser(prog="hopfhom", description="Exact Hopf cyclic homology computations")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="run structural validators on a spec file")
    v.add_argument("spec")
    v.add_argument("--out")
    v.set_defaults(func=cmd_validate)

    h = sub.add_parser("homology", help="compute HH, HC or HP of a construction")
    h.add_argument("spec")
    h.add_argument("--theory", choices=["hh", "hc", "hp"], default="hc")
    h.add_argument("--construction", choices=CONSTRUCTIONS, required=True)
    h.add_argument("--delta")
    h.add_argument("--sigma")
    h.add_argument("--max-degree", type=int, dest="max_degree")
    h.add_argument("--q")
    h.add_argument("--out")
    h.add_argument("--no-cache", action="store_true")
    h.set_defaults(func=cmd_homology)

    c = sub.add_parser("check", help="run a named check")
    c.add_argument("check_id")
    c.add_argument("spec", nargs="?")
    c.add_argument("--delta")
    c.add_argument("--sigma")
    c.add_argument("--max-degree", type=int, dest="max_degree")
    c.add_argument("--q")
    c.add_argument("--size", type=int, default=2, help="matrix size for the Morita check")
    c.add_argument("--variant", choices=["corrected", "verbatim"], default="corrected")
    c.add_argument("--out")
    c.set_defaults(func=cmd_check)

    l = sub.add_parser("list-checks", help="list the check identifiers")
    l.set_defaults(func=cmd_list_checks)
    return p


def main(argv=None):
    p = parser()
    try:
        args = p.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    if getattr(args, "max_degree", None) is not None and args.max_degree < 0:
        sys.stderr.write("error: --max-degree must be >= 0\n")
        return 2
    if getattr(args, "q", None) is not None:
        try:
            qv = qq(args.q)
        except (ValueError, ZeroDivisionError):
            sys.stderr.write("error: --q must be a rational\n")
            return 2
        if qv in (0, 1, -1):
            sys.stderr.write("error: --q must not be 0 or +-1\n")
            return 2
    try:
        return args.func(args)
    except UnknownCheck as e:
        sys.stderr.write("error: unknown check %s (see list-checks)\n" % e)
        return 2
    except (SchemaError, UnknownCharacter, IncompatibleConstruction) as e:
        sys.stderr.write("error: %s\n" % e)
        return 2
    except ValidationFailure as e:
        sys.stderr.write("error: invalid structure: %s %s\n" % (e, jsonable(e.witness)))
        return 1
    except NotAGroupoid as e:
        sys.stderr.write("error: invalid groupoid: %s\n" % e)
        return 1
    except (PreconditionError, NotInvolutive) as e:
        sys.stderr.write("error: %s: %s\n" % (type(e).__name__, e))
        return 2


if __name__ == "__main__":
    sys.exit(main())
