"""Parameterized example bundles, produced as definition documents.

``make(name, **params)`` returns a JSON-ready dict; ``defs.build`` turns it
into live structures.  Going through the document keeps export and
verification on the same path.
"""

from __future__ import annotations

from .algebra import Vec, key_order, tensor
from .defs import SCHEMA_VERSION, encode_key, encode_vec
from .errors import UsageError
from .exact import Field
from .families import TRANSPOSITION, group_by_name, parse_group_element, primitive_root_ok, z_element

NAMES = ("A_G", "A_Z", "group_algebra", "induced", "sweedler", "taft", "epdq", "tensor")
ALIASES = {"A_G_dense": "A_G", "A_Z_rule": "A_Z"}


def _field(p):
    return Field.rationals() if p in (None, 0) else Field.prime(int(p))


def _doc(name, F, params, algebras, suites, multipliers=None, coactions=None, projections=None, smash=None):
    doc = {"schema_version": SCHEMA_VERSION, "name": name, "field": F.describe(),
           "params": {k: str(v) for k, v in sorted(params.items()) if v is not None},
           "algebras": algebras, "suites": suites}
    for key, val in (("multipliers", multipliers), ("coactions", coactions), ("projections", projections),
                     ("smash", smash)):
        if val:
            doc[key] = val
    return doc


def _suite(suite, target, expect=None, **extra):
    s = {"suite": suite, "target": target}
    if expect:
        s["expect"] = expect
    s.update(extra)
    return s


def _subgroup(G, spec):
    if spec is None:
        return list(G.elements)
    if isinstance(spec, str):
        items = spec.split(";") if ";" in spec else spec.split(",")
    else:
        items = list(spec)
    N = sorted({parse_group_element(G, s.strip() if isinstance(s, str) else s) for s in items}, key=key_order)
    if not G.is_subgroup(N):
        raise UsageError(f"{N} is not a subgroup of {G.name}")
    return N


def _h_suites(proper, commutative=True, smash=True):
    """Suites of an h-induced bundle; ``proper`` marks a non-global h."""
    neg = "fail" if proper else None
    out = [_suite("h_conditions", "h"), _suite("partial", "rho"), _suite("symmetric", "rho"),
           _suite("global", "rho", neg), _suite("globality", "rho", neg)]
    if commutative:
        out += [_suite("comodule_algebra", "rho"), _suite("bialgebra", "rho")]
    if smash:
        out += [_suite("T_bijective", "rho", neg), _suite("smash", "rho"),
                _suite("smash_right_counit", "rho", neg), _suite("smash_iso", "rho"),
                _suite("T_tilde", "rho"), _suite("smash_T_bijective", "rho", neg)]
    return out


def make_A_G(group="Z4", subgroup="0,2", Ygroup="Z2", p=None):
    """Y = kH coacted by A_G through the indicator of a subgroup N."""
    F = _field(p)
    G = group_by_name(group)
    N = _subgroup(G, subgroup)
    h = Vec({g: F.one for g in N}, F)
    proper = len(N) < len(G.elements)
    return _doc(f"A_G({group}, N={N})", F, {"group": group, "subgroup": subgroup, "Y": Ygroup, "p": p},
                {"Y": {"builtin": "kG", "group": Ygroup}, "A": {"builtin": "A_G", "group": group}},
                [_suite("hopf", "A"), _suite("hopf", "Y")] + _h_suites(proper),
                multipliers={"h": {"algebra": "A", "element": encode_vec(h)}},
                coactions={"rho": {"kind": "h_induced", "Y": "Y", "A": "A", "h": "h"}},
                smash={"rho": {"subgroup": [encode_key(g) for g in N]}})


def make_group_algebra(group="S3", p=None):
    """The global coaction rho(x) = sum_g delta_g (x) xg of kG over A_G."""
    F = _field(p)
    group_by_name(group)
    return _doc(f"kG/A_G({group})", F, {"group": group, "p": p},
                {"Y": {"builtin": "kG", "group": group}, "A": {"builtin": "A_G", "group": group}},
                [_suite("hopf", "A"), _suite("hopf", "Y"), _suite("partial", "rho"),
                 _suite("symmetric", "rho"), _suite("global", "rho"), _suite("globality", "rho"),
                 _suite("T_bijective", "rho")],
                coactions={"rho": {"kind": "group_coaction", "Y": "Y", "A": "A", "E": "identity"}})


def make_induced(p=None):
    """kS3 coacted by A_S3, projected onto k<(12)>."""
    F = _field(p)
    t = TRANSPOSITION
    e = (0, 1, 2)
    return _doc("induced(kS3 -> k<(12)>)", F, {"p": p},
                {"Z": {"builtin": "kG", "group": "S3"}, "A": {"builtin": "A_G", "group": "S3"}},
                [_suite("global", "rho"), _suite("partial", "beta"), _suite("symmetric", "beta"),
                 _suite("global", "beta", "fail"), _suite("globality", "beta", "fail"),
                 _suite("projection", "pi", domain="Y"), _suite("projection", "pi", "fail", domain="Z"),
                 _suite("induction", "rho", projection="pi", t=encode_key(t), quantify_over="Y"),
                 _suite("induction", "rho", "fail", projection="pi", t=encode_key(t), quantify_over="Z")],
                coactions={"rho": {"kind": "group_coaction", "Y": "Z", "A": "A", "E": "identity"},
                           "beta": {"kind": "induced", "parent": "rho", "projection": "pi"}},
                projections={"pi": {"Z": "Z", "image": [encode_key(e), encode_key(t)]}})


def _z_h_doc(name, F, params, hopf_spec, z, n_group, Ygroup="Z2"):
    G = group_by_name(n_group)
    h = Vec({G.e: F.one}, F)
    zh = Vec(tensor(z, h).terms, F)
    return _doc(name, F, params,
                {"H": hopf_spec, "AG": {"builtin": "A_G", "group": n_group}, "A": {"tensor": ["H", "AG"]},
                 "Y": {"builtin": "kG", "group": Ygroup}},
                [_suite("hopf", "A")] + _h_suites(True, commutative=False, smash=False),
                multipliers={"h": {"algebra": "A", "element": encode_vec(zh)}},
                coactions={"rho": {"kind": "h_induced", "Y": "Y", "A": "A", "h": "h"}})


def make_sweedler(alpha="1", p=None, group="Z2"):
    """rho(y) = z (x) h (x) y over H4 (x) A_G, z = (1+g)/2 + alpha gx, h = delta_e."""
    F = _field(p)
    z = z_element("sweedler", F(alpha), F)
    return _z_h_doc(f"sweedler(alpha={alpha})", F, {"alpha": alpha, "p": p, "group": group},
                    {"builtin": "sweedler"}, z, group)


def make_taft(p=7, q="2", alpha="1", group="Z3"):
    """rho(y) = z (x) h (x) y over T3(q) (x) A_G."""
    F = _field(p)
    if not primitive_root_ok(F(q), 3, F):
        raise UsageError(f"q={q} is not a primitive cube root of unity in {F}")
    z = z_element("taft", F(alpha), F, F(q))
    return _z_h_doc(f"taft(q={q}, alpha={alpha})", F, {"alpha": alpha, "p": p, "q": q, "group": group},
                    {"builtin": "taft", "n": 3, "q": str(q)}, z, group)


def make_epdq(lam="2", pmax=3, qmax=3, p=None):
    """rho(y) = e_0 (x) y over the e_p d^q algebra."""
    F = _field(p)
    if not F(lam):
        raise UsageError("lambda must be nonzero")
    return _doc(f"epdq(lambda={lam})", F, {"lambda": lam, "pmax": pmax, "qmax": qmax, "p": p},
                {"A": {"builtin": "epdq", "lambda": str(lam), "window": [int(pmax), int(qmax)]},
                 "Y": {"builtin": "kG", "group": "Z2"}},
                [_suite("hopf", "A"), _suite("h_conditions", "h"), _suite("partial", "rho"),
                 _suite("symmetric", "rho"), _suite("global", "rho", "fail"), _suite("globality", "rho", "fail"),
                 _suite("comodule_algebra", "rho")],
                multipliers={"h": {"algebra": "A", "element": [[[0, 0], "1"]]}},
                coactions={"rho": {"kind": "h_induced", "Y": "Y", "A": "A", "h": "h"}})


def make_A_Z(m=2, radius=4, p=None):
    """rho(y) = 1_{mZ} (x) y over A_Z; the multiplier is not an element."""
    F = _field(p)
    m = int(m)
    if m < 1:
        raise UsageError("m must be positive")
    neg = "fail" if m > 1 else None
    return _doc(f"A_Z(m={m})", F, {"m": m, "radius": radius, "p": p},
                {"A": {"builtin": "A_Z", "radius": int(radius)}, "Y": {"builtin": "kG", "group": "Z2"}},
                [_suite("hopf", "A"), _suite("regular", "A"), _suite("h_conditions", "h"),
                 _suite("partial", "rho"), _suite("symmetric", "rho"), _suite("global", "rho", neg),
                 _suite("globality", "rho", neg), _suite("comodule_algebra", "rho")],
                multipliers={"h": {"algebra": "A", "rule": "periodic_indicator", "m": m}},
                coactions={"rho": {"kind": "h_induced", "Y": "Y", "A": "A", "h": "h"}})


def make_tensor(parts="sweedler,A_Z2", p=None):
    """Tensor product of dense Hopf algebras named like ``sweedler``, ``A_Z4``, ``kS3``."""
    F = _field(p)
    names = parts.split(",") if isinstance(parts, str) else list(parts)
    algebras = {}
    for i, nm in enumerate(n.strip() for n in names):
        if nm == "sweedler":
            spec = {"builtin": "sweedler"}
        elif nm.startswith("A_"):
            group_by_name(nm[2:])
            spec = {"builtin": "A_G", "group": nm[2:]}
        elif nm.startswith("k"):
            group_by_name(nm[1:])
            spec = {"builtin": "kG", "group": nm[1:]}
        else:
            raise UsageError(f"unknown tensor factor {nm!r} (use sweedler, A_<group>, k<group>)")
        algebras[f"P{i}"] = spec
    if len(algebras) < 2:
        raise UsageError("a tensor product needs at least two factors")
    algebras["T"] = {"tensor": sorted(algebras)}
    return _doc(f"tensor({parts})", F, {"parts": parts, "p": p}, algebras,
                [_suite("hopf", "T"), _suite("regular", "T")])


_MAKERS = {"A_G": make_A_G, "A_Z": make_A_Z, "group_algebra": make_group_algebra, "induced": make_induced,
           "sweedler": make_sweedler, "taft": make_taft, "epdq": make_epdq, "tensor": make_tensor}


def make(name, **params):
    """Definition document of the named bundle; unknown names or bad params raise UsageError."""
    name = ALIASES.get(name, name)
    if name not in _MAKERS:
        raise UsageError(f"unknown gallery bundle {name!r}; choose from {', '.join(NAMES)}")
    renames = {"lambda": "lam", "Y": "Ygroup"}
    params = {renames.get(k, k): v for k, v in params.items() if v is not None}
    try:
        return _MAKERS[name](**params)
    except TypeError as exc:
        raise UsageError(f"bad parameters for {name}: {exc}") from exc
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad parameters for {name}: {exc}") from exc
