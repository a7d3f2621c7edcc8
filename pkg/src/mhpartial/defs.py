"""Definition documents: JSON descriptions of algebras, coactions and suites.

A document is a dict with ``schema_version`` 1.  Scalars are strings
(``"3"``, ``"-1/2"``, ``"4 mod 7"``); basis keys are ints, strings or
nested lists (read back as tuples).  Products of built-in families are
referenced by name and parameters; anything else is a dense table.
"""

from __future__ import annotations

import json

from .algebra import DenseAlgebra, Vec
from .coaction import Coaction, E_identity
from .construct import ProjectionSpec, build_h_coaction, build_induced_coaction, group_coaction
from .errors import UnsupportedStructure, UsageError
from .exact import Field
from .families import (a_z, epdq, function_algebra, group_algebra, group_by_name, parse_group_element,
                       periodic_indicator, sweedler, taft)
from .mhopf import dense_mha, tensor_mha
from .multiplier import embed, identity

SCHEMA_VERSION = 1

TOP_KEYS = {"schema_version", "name", "field", "algebras", "multipliers", "coactions", "projections",
            "smash", "suites", "params"}


class DefinitionError(UsageError):
    """Schema violation, reported with the JSON path of the offending value."""

    def __init__(self, path, msg):
        super().__init__(f"{path}: {msg}")
        self.path = path


# -- scalars, keys, elements ------------------------------------------------------------


def decode_key(k):
    if isinstance(k, list):
        return tuple(decode_key(x) for x in k)
    if isinstance(k, bool) or not isinstance(k, (int, str)):
        raise UsageError(f"bad basis key {k!r}")
    return k


def encode_key(k):
    if isinstance(k, tuple):
        return [encode_key(x) for x in k]
    return k


def encode_scalar(field, c):
    return field.fmt(field(c))


def encode_vec(v: Vec):
    return [[encode_key(k), encode_scalar(v.field, c)] for k, c in v.items()]


def _scalar(field, s, path):
    if not isinstance(s, str):
        raise DefinitionError(path, "scalars must be strings")
    try:
        return field.parse(s)
    except (UsageError, ZeroDivisionError) as exc:
        raise DefinitionError(path, str(exc)) from exc


def _vec(field, terms, path, legs=1):
    if not isinstance(terms, list):
        raise DefinitionError(path, "an element is a list of [key, scalar] pairs")
    out = {}
    for i, t in enumerate(terms):
        if not (isinstance(t, list) and len(t) == 2):
            raise DefinitionError(f"{path}[{i}]", "expected [key, scalar]")
        try:
            k = decode_key(t[0])
        except UsageError as exc:
            raise DefinitionError(f"{path}[{i}][0]", str(exc)) from exc
        out[k] = out.get(k, 0) + _scalar(field, t[1], f"{path}[{i}][1]")
    return Vec(out, field, legs)


def _need(d, key, path, kind=None):
    if not isinstance(d, dict) or key not in d:
        raise DefinitionError(path, f"missing {key!r}")
    v = d[key]
    if kind is not None and not isinstance(v, kind):
        raise DefinitionError(f"{path}.{key}", f"expected {kind.__name__}")
    return v


# -- the bundle ----------------------------------------------------------------------------


class Bundle:
    """Everything a document defines, by name."""

    def __init__(self, doc, field):
        self.doc = doc
        self.name = doc.get("name", "bundle")
        self.field = field
        self.algebras = {}
        self.multipliers = {}
        self.coactions = {}
        self.projections = {}
        self.smash = doc.get("smash")
        self.suites = doc.get("suites", [])

    def algebra(self, ref, path):
        if ref not in self.algebras:
            raise DefinitionError(path, f"unknown algebra {ref!r}")
        return self.algebras[ref]

    def coaction(self, ref, path):
        if ref not in self.coactions:
            raise DefinitionError(path, f"unknown coaction {ref!r}")
        return self.coactions[ref]


def _field(spec):
    if not isinstance(spec, dict):
        raise DefinitionError("$.field", "expected an object")
    kind = spec.get("kind")
    try:
        if kind == "rationals":
            return Field.rationals()
        if kind == "prime":
            return Field.prime(_need(spec, "p", "$.field", int))
    except UsageError as exc:
        raise DefinitionError("$.field", str(exc)) from exc
    raise DefinitionError("$.field.kind", f"unknown field kind {kind!r}")


def _group(spec, path):
    try:
        return group_by_name(_need(spec, "group", path, str))
    except UsageError as exc:
        raise DefinitionError(f"{path}.group", str(exc)) from exc


def _dense(F, spec, path):
    basis = [decode_key(k) for k in _need(spec, "basis", path, list)]
    n = len(basis)

    def idx(i, p):
        if not isinstance(i, int) or not 0 <= i < n:
            raise DefinitionError(p, f"basis index {i!r} out of range")
        return basis[i]

    table = {}
    for r, row in enumerate(_need(spec, "product", path, list)):
        p = f"{path}.product[{r}]"
        if not (isinstance(row, list) and len(row) == 3 and isinstance(row[2], list)):
            raise DefinitionError(p, "expected [i, j, [[k, scalar], ...]]")
        a, b = idx(row[0], p + "[0]"), idx(row[1], p + "[1]")
        table[(a, b)] = {idx(k, p + f"[2][{m}]"): _scalar(F, c, p + f"[2][{m}]")
                         for m, (k, c) in enumerate(row[2])}
    delta = {}
    for r, row in enumerate(_need(spec, "coproduct", path, list)):
        p = f"{path}.coproduct[{r}]"
        if not (isinstance(row, list) and len(row) == 2 and isinstance(row[1], list)):
            raise DefinitionError(p, "expected [i, [[j, k, scalar], ...]]")
        terms = {}
        for m, t in enumerate(row[1]):
            if not (isinstance(t, list) and len(t) == 3):
                raise DefinitionError(f"{p}[1][{m}]", "expected [j, k, scalar]")
            key = (idx(t[0], p), idx(t[1], p))
            terms[key] = terms.get(key, 0) + _scalar(F, t[2], f"{p}[1][{m}][2]")
        delta[idx(row[0], p + "[0]")] = Vec(terms, F, 2)
    counit = _need(spec, "counit", path, list)
    if len(counit) != n:
        raise DefinitionError(f"{path}.counit", f"expected {n} scalars")
    eps = {basis[i]: _scalar(F, c, f"{path}.counit[{i}]") for i, c in enumerate(counit)}
    anti = None
    if "antipode" in spec:
        anti = {}
        for r, row in enumerate(spec["antipode"]):
            p = f"{path}.antipode[{r}]"
            anti[idx(row[0], p)] = Vec({idx(k, p): _scalar(F, c, p) for k, c in row[1]}, F)

    def antipode(k):
        if anti is None:
            raise UnsupportedStructure("no antipode given")
        return anti.get(k, Vec.zero(F))

    alg = DenseAlgebra(basis, F, table=table, name=spec.get("name", "dense"))
    if alg.unit() is None:
        raise DefinitionError(path, "the dense algebra has no unit")
    mha = dense_mha(alg, lambda k: delta.get(k, Vec.zero(F, 2)), lambda k: eps[k], antipode, name=alg.name)
    mha.has_antipode = anti is not None
    return mha


def _algebra(bundle, name, spec, path):
    F = bundle.field
    if "tensor" in spec:
        parts = [bundle.algebra(r, f"{path}.tensor") for r in _need(spec, "tensor", path, list)]
        return tensor_mha(parts)
    if "dense" in spec:
        return _dense(F, _need(spec, "dense", path, dict), f"{path}.dense")
    kind = _need(spec, "builtin", path, str)
    try:
        if kind == "A_G":
            return function_algebra(_group(spec, path), F)
        if kind == "kG":
            return group_algebra(_group(spec, path), F)
        if kind == "sweedler":
            return sweedler(F)
        if kind == "taft":
            return taft(_need(spec, "n", path, int), _scalar(F, _need(spec, "q", path, str), f"{path}.q"), F)
        if kind == "A_Z":
            return a_z(F, spec.get("radius", 4))
        if kind == "epdq":
            pmax, qmax = spec.get("window", [3, 3])
            return epdq(_scalar(F, _need(spec, "lambda", path, str), f"{path}.lambda"), F, pmax, qmax)
    except UsageError as exc:
        if isinstance(exc, DefinitionError):
            raise
        raise DefinitionError(path, str(exc)) from exc
    raise DefinitionError(f"{path}.builtin", f"unknown built-in {kind!r}")


def _multiplier(bundle, spec, path):
    A = bundle.algebra(_need(spec, "algebra", path, str), f"{path}.algebra")
    if "element" in spec:
        v = _vec(bundle.field, spec["element"], f"{path}.element")
        for k in v.terms:
            if not A.alg.valid(k):
                raise DefinitionError(f"{path}.element", f"key {k!r} not in {A.name}")
        return A, v
    rule = _need(spec, "rule", path, str)
    if rule == "identity":
        return A, identity(A.alg)
    if rule == "periodic_indicator":
        return A, periodic_indicator(A, _need(spec, "m", path, int))
    if rule == "c_lambda":
        if not hasattr(A, "c_power"):
            raise DefinitionError(f"{path}.rule", "c_lambda needs the epdq algebra")
        return A, A.c_power(spec.get("power", 1))
    raise DefinitionError(f"{path}.rule", f"unknown multiplier rule {rule!r}")


def _coaction(bundle, spec, path):
    kind = _need(spec, "kind", path, str)
    if kind == "induced":
        parent = bundle.coaction(_need(spec, "parent", path, str), f"{path}.parent")
        ps = bundle.projections.get(_need(spec, "projection", path, str))
        if ps is None:
            raise DefinitionError(f"{path}.projection", "unknown projection")
        return build_induced_coaction(parent, ps)
    Y = bundle.algebra(_need(spec, "Y", path, str), f"{path}.Y")
    A = bundle.algebra(_need(spec, "A", path, str), f"{path}.A")
    if Y.classical is None:
        raise DefinitionError(f"{path}.Y", "the coacted algebra must be dense")
    if kind == "h_induced":
        ref = _need(spec, "h", path, str)
        if ref not in bundle.multipliers:
            raise DefinitionError(f"{path}.h", f"unknown multiplier {ref!r}")
        MA, h = bundle.multipliers[ref]
        if MA is not A:
            raise DefinitionError(f"{path}.h", "multiplier lives on a different algebra")
        return build_h_coaction(Y, A, h, name=ref + "(x)y")
    if kind == "group_coaction":
        G = getattr(A, "group", None)
        if G is None:
            raise DefinitionError(f"{path}.A", "group_coaction needs a function algebra A_G")
        sub = spec.get("subgroup")
        if sub is not None:
            try:
                sub = [parse_group_element(G, decode_key(s)) for s in sub]
            except UsageError as exc:
                raise DefinitionError(f"{path}.subgroup", str(exc)) from exc
            if not G.is_subgroup(sub):
                raise DefinitionError(f"{path}.subgroup", f"{sub} is not a subgroup")
        cc = group_coaction(Y, A, sub)
    elif kind == "explicit":
        F = bundle.field
        tabs = {}
        for side in ("rR", "rL"):
            t = {}
            for r, row in enumerate(_need(spec, side, path, list)):
                p = f"{path}.{side}[{r}]"
                if not (isinstance(row, list) and len(row) == 3):
                    raise DefinitionError(p, "expected [y, a, [[[u, v], scalar], ...]]")
                t[(decode_key(row[0]), decode_key(row[1]))] = _vec(F, row[2], f"{p}[2]", legs=2)
            tabs[side] = t
        zero = Vec.zero(F, 2)
        cc = Coaction(Y, A, lambda y, a: tabs["rR"].get((y, a), zero),
                      lambda y, a: tabs["rL"].get((y, a), zero), name="explicit")
    else:
        raise DefinitionError(f"{path}.kind", f"unknown coaction kind {kind!r}")
    if spec.get("E") == "identity":
        cc.E = E_identity(cc)
    return cc


def build(doc) -> Bundle:
    """Validate a definition document and construct its structures."""
    if not isinstance(doc, dict):
        raise DefinitionError("$", "expected an object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise DefinitionError("$.schema_version", f"expected {SCHEMA_VERSION}")
    extra = sorted(set(doc) - TOP_KEYS)
    if extra:
        raise DefinitionError(f"$.{extra[0]}", "unknown top-level key")
    bundle = Bundle(doc, _field(doc.get("field")))
    for section in ("algebras", "multipliers", "coactions", "projections"):
        if not isinstance(doc.get(section, {}), dict):
            raise DefinitionError(f"$.{section}", "expected an object")
    pending = dict(doc.get("algebras", {}))
    while pending:
        ready = [n for n, spec in sorted(pending.items())
                 if not (isinstance(spec, dict) and isinstance(spec.get("tensor"), list))
                 or all(r in bundle.algebras for r in spec["tensor"])]
        if not ready:
            name = sorted(pending)[0]
            raise DefinitionError(f"$.algebras.{name}.tensor", "unresolved or cyclic factor reference")
        for name in ready:
            bundle.algebras[name] = _algebra(bundle, name, pending.pop(name), f"$.algebras.{name}")
    for name, spec in doc.get("multipliers", {}).items():
        A, h = _multiplier(bundle, spec, f"$.multipliers.{name}")
        if isinstance(h, Vec):
            h = embed(h, A.alg, name)
        h.name = name
        bundle.multipliers[name] = (A, h)
    # induced coactions refer to projections, which refer to algebras only
    for name, spec in doc.get("projections", {}).items():
        path = f"$.projections.{name}"
        Z = bundle.algebra(_need(spec, "Z", path, str), f"{path}.Z")
        keys = [decode_key(k) for k in _need(spec, "image", path, list)]
        try:
            bundle.projections[name] = ProjectionSpec(Z, keys, name=name)
        except UsageError as exc:
            raise DefinitionError(path, str(exc)) from exc
    pending = dict(doc.get("coactions", {}))
    while pending:
        progressed = False
        for name, spec in list(pending.items()):
            parent = spec.get("parent") if isinstance(spec, dict) else None
            if parent is not None and parent not in bundle.coactions:
                continue
            bundle.coactions[name] = _coaction(bundle, spec, f"$.coactions.{name}")
            bundle.coactions[name].name = name
            del pending[name]
            progressed = True
        if not progressed:
            name = sorted(pending)[0]
            raise DefinitionError(f"$.coactions.{name}.parent", "unresolved parent coaction")
    if not isinstance(bundle.suites, list):
        raise DefinitionError("$.suites", "expected a list")
    for i, s in enumerate(bundle.suites):
        _need(s, "suite", f"$.suites[{i}]", str)
        target = _need(s, "target", f"$.suites[{i}]", str)
        if not any(target in t for t in (bundle.algebras, bundle.multipliers, bundle.coactions, bundle.projections)):
            raise DefinitionError(f"$.suites[{i}].target", f"unknown target {target!r}")
    return bundle


def load(path) -> Bundle:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise DefinitionError("$", f"invalid JSON: {exc}") from exc
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    return build(doc)


def dump(doc) -> str:
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


# -- dense export -------------------------------------------------------------------------


def dense_document(name, field, basis_labels, product, coproduct, counit, suites=("bialgebra",)):
    """A document holding one dense bialgebra with integer-indexed structure constants."""
    n = len(basis_labels)
    enc = lambda c: encode_scalar(field, c)  # noqa: E731
    prod = [[i, j, [[k, enc(c)] for k, c in sorted(t.items())]] for (i, j), t in sorted(product.items()) if t]
    cop = [[i, [[j, k, enc(c)] for (j, k), c in sorted(t.items())]] for i, t in sorted(coproduct.items())]
    return {
        "schema_version": SCHEMA_VERSION,
        "name": name,
        "field": field.describe(),
        "algebras": {"S": {"dense": {"name": name, "basis": list(range(n)), "labels": basis_labels,
                                     "product": prod, "coproduct": cop,
                                     "counit": [enc(counit[i]) for i in range(n)]}}},
        "suites": [{"suite": s, "target": "S"} for s in suites],
    }


__all__ = ["Bundle", "DefinitionError", "SCHEMA_VERSION", "build", "decode_key", "dense_document", "dump",
           "encode_key", "encode_vec", "load"]
