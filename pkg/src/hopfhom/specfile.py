"""
JSON descriptions of algebras, Hopf algebras, groupoids and module algebras.

Kinds:
    group_algebra, function_algebra   {"group": "Z2" | "S3" | "Z2xZ2"} or {"table": [[...]]}
    sweedler_h4                       no payload
    structure_constants               dim, labels, mult, unit and optionally
                                      comult, counit, antipode (sparse lists)
    groupoid                          objects, morphisms, composition
    module_algebra                    {"builtin": "sign" | "h4"} or hopf, algebra,
                                      action and an optional trace

Scalars are JSON integers or reduced rational strings such as "-3/4".
"""

import hashlib
import json
import re
from fractions import Fraction

import jsonschema

from .exactla import qq, vclean
from .hopfcore import (FiniteAlgebra, FiniteGroup, HopfAlgebra, cyclic_group, symmetric_group,
                       direct_product, group_algebra, function_algebra, sweedler_h4,
                       truncated_polynomial, find_characters, find_grouplikes, counit_character,
                       unit_grouplike)
from .extalg import FiniteGroupoid
from .hopfcyc import ModuleAlgebraAction


class SchemaError(ValueError):
    """The document does not have the shape of a spec file."""


class ValidationFailure(ValueError):
    """The document is well formed but the structure it describes is not valid."""

    def __init__(self, msg, witness=None):
        ValueError.__init__(self, msg)
        self.witness = witness


class UnknownCharacter(ValueError):
    pass


SCALAR = {"oneOf": [{"type": "integer"},
                    {"type": "string", "pattern": r"^-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?$"}]}
INDEX = {"type": "integer", "minimum": 0}


def _entries(k):
    return {"type": "array",
            "items": {"type": "array", "minItems": k + 1, "maxItems": k + 1,
                      "prefixItems": [INDEX] * k + [SCALAR]}}


GROUP = {
    "type": "object",
    "properties": {
        "kind": {"enum": ["group_algebra", "function_algebra"]},
        "name": {"type": "string"},
        "group": {"type": "string", "pattern": r"^([ZS][1-9][0-9]*)(x[ZS][1-9][0-9]*)*$"},
        "table": {"type": "array", "minItems": 1,
                  "items": {"type": "array", "items": INDEX}},
        "labels": {"type": "array", "items": {"type": "string"}},
    },
    "oneOf": [{"required": ["group"]}, {"required": ["table"]}],
    "additionalProperties": False,
}

STRUCTURE = {
    "type": "object",
    "properties": {
        "kind": {"const": "structure_constants"},
        "name": {"type": "string"},
        "dim": {"type": "integer", "minimum": 1},
        "labels": {"type": "array", "items": {"type": "string"}},
        "mult": _entries(3),
        "unit": _entries(1),
        "comult": _entries(3),
        "counit": _entries(1),
        "antipode": _entries(2),
    },
    "required": ["dim", "mult", "unit"],
    "dependentRequired": {"comult": ["counit", "antipode"], "counit": ["comult", "antipode"],
                          "antipode": ["comult", "counit"]},
    "additionalProperties": False,
}

GROUPOID = {
    "type": "object",
    "properties": {
        "kind": {"const": "groupoid"},
        "name": {"type": "string"},
        "objects": {"type": "array", "minItems": 1},
        "morphisms": {"type": "array", "items": {
            "type": "object", "required": ["name", "src", "tgt"],
            "properties": {"name": {"type": "string"}}}},
        "composition": {"type": "array", "items": {
            "type": "array", "minItems": 3, "maxItems": 3, "items": {"type": "string"}}},
    },
    "required": ["objects", "morphisms", "composition"],
    "additionalProperties": False,
}

H4 = {"type": "object", "properties": {"kind": {"const": "sweedler_h4"}, "name": {"type": "string"}},
      "additionalProperties": False}

MODULE = {
    "type": "object",
    "properties": {
        "kind": {"const": "module_algebra"},
        "name": {"type": "string"},
        "builtin": {"enum": ["sign", "h4"]},
        "hopf": {"type": "object"},
        "algebra": {"type": "object"},
        "action": _entries(3),
        "trace": {"type": "array", "items": SCALAR},
    },
    "oneOf": [{"required": ["builtin"]}, {"required": ["hopf", "algebra", "action"]}],
    "additionalProperties": False,
}

SCHEMAS = {"group_algebra": GROUP, "function_algebra": GROUP, "sweedler_h4": H4,
           "structure_constants": STRUCTURE, "groupoid": GROUPOID, "module_algebra": MODULE}


def _check_schema(doc, where="spec"):
    if not isinstance(doc, dict) or doc.get("kind") not in SCHEMAS:
        raise SchemaError("%s: 'kind' must be one of %s" % (where, ", ".join(sorted(SCHEMAS))))
    try:
        jsonschema.validate(doc, SCHEMAS[doc["kind"]],
                            cls=jsonschema.Draft202012Validator)
    except jsonschema.ValidationError as e:
        path = "/".join(str(p) for p in e.absolute_path)
        raise SchemaError("%s/%s: %s" % (where, path, e.message))


def scalar(x, where="scalar"):
    """JSON scalar to int/Fraction; strings must be in reduced form."""
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise SchemaError("%s: %r is not an exact scalar" % (where, x))
    v = qq(x)
    if isinstance(x, str):
        f = Fraction(v)
        canon = str(f.numerator) if f.denominator == 1 else "%d/%d" % (f.numerator, f.denominator)
        if x != canon:
            raise SchemaError("%s: %r is not in reduced form (expected %r)" % (where, x, canon))
    return v


def spec_hash(doc):
    blob = json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


# ---------------------------------------------------------------------------
# groups

def _named_group(name):
    parts = name.split("x")
    out = None
    for p in parts:
        n = int(p[1:])
        G = cyclic_group(n) if p[0] == "Z" else symmetric_group(n)
        out = G if out is None else direct_product(out, G)
    out.name = name
    return out


def group_table_failures(table):
    n = len(table)
    if any(len(r) != n for r in table):
        return [("square table", None)]
    if any(x >= n for r in table for x in r):
        return [("entries in range", None)]
    fails = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    return [("associativity", (a, b, c))]
    ids = [e for e in range(n) if all(table[e][g] == g == table[g][e] for g in range(n))]
    if not ids:
        return [("identity", None)]
    e = ids[0]
    for g in range(n):
        if not any(table[g][h] == e for h in range(n)):
            fails.append(("inverse", g))
            break
    return fails


def load_group(doc):
    if "group" in doc:
        G = _named_group(doc["group"])
    else:
        bad = group_table_failures(doc["table"])
        if bad:
            raise ValidationFailure("not a group table", {"axiom": bad[0][0], "indices": bad[0][1]})
        G = FiniteGroup(doc["table"], doc.get("labels"), doc.get("name", "G"))
    return G


# ---------------------------------------------------------------------------
# loading

def _vec(entries, dim, where):
    out = {}
    for e in entries:
        i = e[0]
        if i >= dim:
            raise SchemaError("%s: index %d out of range" % (where, i))
        out[i] = out.get(i, 0) + scalar(e[1], where)
    return vclean(out)


def _structure(doc):
    d = doc["dim"]
    labels = doc.get("labels")
    if labels is not None and len(labels) != d:
        raise SchemaError("spec/labels: expected %d labels" % d)
    mult = {}
    for i, j, k, c in doc["mult"]:
        if max(i, j, k) >= d:
            raise SchemaError("spec/mult: index out of range in %r" % ([i, j, k, c],))
        v = mult.setdefault((i, j), {})
        v[k] = v.get(k, 0) + scalar(c, "spec/mult")
    unit = _vec(doc["unit"], d, "spec/unit")
    name = doc.get("name", "A")
    if "comult" not in doc:
        return FiniteAlgebra(d, mult, unit, labels, name)
    comult = [{} for _ in range(d)]
    for i, j, k, c in doc["comult"]:
        if max(i, j, k) >= d:
            raise SchemaError("spec/comult: index out of range in %r" % ([i, j, k, c],))
        comult[i][(j, k)] = comult[i].get((j, k), 0) + scalar(c, "spec/comult")
    cu = _vec(doc["counit"], d, "spec/counit")
    anti = [{} for _ in range(d)]
    for i, j, c in doc["antipode"]:
        if max(i, j) >= d:
            raise SchemaError("spec/antipode: index out of range in %r" % ([i, j, c],))
        anti[i][j] = anti[i].get(j, 0) + scalar(c, "spec/antipode")
    return HopfAlgebra(d, mult, unit, comult, [cu.get(i, 0) for i in range(d)], anti, labels, name)


def _module_algebra(doc):
    from .smash import sign_action, h4_action
    if "builtin" in doc:
        act = sign_action() if doc["builtin"] == "sign" else h4_action()
        if "trace" in doc:
            act.trace = [scalar(x, "spec/trace") for x in doc["trace"]]
        return act
    H = build(doc["hopf"], "spec/hopf")
    A = build(doc["algebra"], "spec/algebra")
    if not isinstance(H, HopfAlgebra) or isinstance(A, FiniteGroupoid):
        raise SchemaError("spec: 'hopf' must describe a Hopf algebra and 'algebra' an algebra")
    table = {}
    for h, a, b, c in doc["action"]:
        if h >= H.dim or a >= A.dim or b >= A.dim:
            raise SchemaError("spec/action: index out of range in %r" % ([h, a, b, c],))
        v = table.setdefault((h, a), {})
        v[b] = v.get(b, 0) + scalar(c, "spec/action")
    act = ModuleAlgebraAction(H, A, table, check=False)
    if "trace" in doc:
        if len(doc["trace"]) != A.dim:
            raise SchemaError("spec/trace: expected %d entries" % A.dim)
        act.trace = [scalar(x, "spec/trace") for x in doc["trace"]]
    return act


def build(doc, where="spec"):
    """Schema-check a parsed document and build the object it describes."""
    _check_schema(doc, where)
    kind = doc["kind"]
    if kind == "group_algebra":
        H = group_algebra(load_group(doc))
    elif kind == "function_algebra":
        H = function_algebra(load_group(doc))
    elif kind == "sweedler_h4":
        H = sweedler_h4()
    elif kind == "structure_constants":
        H = _structure(doc)
    elif kind == "groupoid":
        return FiniteGroupoid.from_json(doc, doc.get("name", "G"))
    else:
        return _module_algebra(doc)
    if "name" in doc:
        H.name = doc["name"]
    return H


def read_spec(path):
    """(document, object); raises SchemaError on unreadable or malformed input."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
        raise SchemaError("cannot read %s: %s" % (path, e))
    return doc, build(doc)


# ---------------------------------------------------------------------------
# named characters and grouplikes

def named_characters(H):
    """[(name, values)]: "eps" for the counit, then chi1, chi2, ...; the
    only nontrivial character with values +-1 (if unique) is also "sign"."""
    eps = counit_character(H)
    chars = find_characters(H)
    out = [("eps", list(eps))]
    others = [c for c in chars if list(c) != list(eps)]
    for k, c in enumerate(others, 1):
        out.append(("chi%d" % k, list(c)))
    signs = [c for c in others if all(x in (1, -1, 0) for x in c) and -1 in c]
    if len(signs) == 1:
        out.append(("sign", list(signs[0])))
    return out


def named_grouplikes(H):
    one = unit_grouplike(H)
    out = [("1", dict(one))]
    k = 0
    for g in find_grouplikes(H):
        if g == one:
            continue
        if len(g) == 1 and list(g.values()) == [1]:
            out.append((H.labels[next(iter(g))], g))
        else:
            k += 1
            out.append(("g%d" % k, g))
    return out


def _explicit(text, dim, where):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != dim:
        raise UnknownCharacter("%s: expected %d comma-separated values" % (where, dim))
    try:
        return [qq(p) for p in parts]
    except (ValueError, ZeroDivisionError):
        raise UnknownCharacter("%s: %r is not a list of rationals" % (where, text))


def resolve_character(H, name):
    if name is None:
        name = "eps"
    if "," in name:
        vals = _explicit(name, H.dim, "delta")
        from .hopfcore import is_character
        if not is_character(H, vals):
            raise UnknownCharacter("delta %r is not a character" % name)
        return name, vals
    for n, v in named_characters(H):
        if n == name:
            return n, v
    raise UnknownCharacter("unknown character %r (known: %s)"
                           % (name, ", ".join(n for n, _ in named_characters(H))))


def resolve_grouplike(H, name):
    if name is None:
        name = "1"
    if "," in name:
        vals = _explicit(name, H.dim, "sigma")
        g = vclean({i: x for i, x in enumerate(vals)})
        from .hopfcore import tensor_product
        if H.delta(g) != tensor_product(g, g) or H.eps(g) != 1:
            raise UnknownCharacter("sigma %r is not grouplike" % name)
        return name, g
    for n, g in named_grouplikes(H):
        if n == name:
            return n, g
    raise UnknownCharacter("unknown grouplike %r (known: %s)"
                           % (name, ", ".join(n for n, _ in named_grouplikes(H))))
