"""Coactions built from a multiplier ``h`` and from projections, with their hypotheses."""

from __future__ import annotations

import itertools

from .algebra import DenseAlgebra, Vec, key_order, map_legs, tensor
from .coaction import Coaction, E_h_tensor_one
from .errors import UnsupportedStructure, UsageError
from .exact import Echelon
from .mhopf import MultiplierHopfAlgebra, counit_of, dense_mha, extend_delta
from .multiplier import as_multiplier
from .report import CheckReport


def build_h_coaction(Y, A, h, name=None) -> Coaction:
    """``rho(y) = h (x) y``: ``rR(y, a) = ha (x) y`` and ``rL(y, a) = ah (x) y``."""
    h = as_multiplier(h, A.alg)
    Yk = Y.alg.key

    cc = Coaction(Y, A,
                  lambda y, a: tensor(h.left(A.alg.key(a)), Yk(y)),
                  lambda y, a: tensor(h.right(A.alg.key(a)), Yk(y)),
                  name=name or f"{h.name}(x)y")
    cc.h = h
    cc.E = E_h_tensor_one(cc, h)
    return cc


def check_h_conditions(h, A, window=None) -> CheckReport:
    """``eps(h) = 1``, ``h(x)h = (h(x)1)Delta(h)`` and ``h(x)h = Delta(h)(h(x)1)`` on window pairs."""
    h = as_multiplier(h, A.alg)
    keys = list(window) if window is not None else A.window()
    rep = CheckReport("h_conditions", window=A.alg.describe_window())
    eh = counit_of(A, h, keys)
    rep.checked += 1
    rep.data["eps(h)"] = "undetermined" if eh is None else A.field.fmt(eh)
    if eh is None:
        rep.fail("(i) eps(h) = 1", {"h": h.name}, "inconsistent", 1)
    elif eh != 1:
        rep.fail("(i) eps(h) = 1", {"h": h.name}, A.field.fmt(eh), "1")
    else:
        rep.clause("(i) eps(h) = 1", True)
    try:
        dl, _ = extend_delta(A, h)
    except UnsupportedStructure as exc:
        rep.inconclusive("(ii) h(x)h = (h(x)1)Delta(h)", str(exc))
        rep.inconclusive("(iii) h(x)h = Delta(h)(h(x)1)", str(exc))
        return rep
    alg = A.alg
    hleft = lambda t, leg: map_legs(t, leg, 1, lambda k: h.left(alg.key(k)), 1)  # noqa: E731
    for a, b in itertools.product(keys, repeat=2):
        ab = Vec.basis((a, b), A.field, 2)
        hh = hleft(hleft(ab, 0), 1)
        rep.check("(ii) h(x)h = (h(x)1)Delta(h)", hh, hleft(dl(ab), 0), (a, b))
        rep.check("(iii) h(x)h = Delta(h)(h(x)1)", hh, dl(hleft(ab, 0)), (a, b))
    for a in keys:
        ha = h.left(alg.key(a))
        rep.check("h^2 = h", h.left(ha), ha, (a,))
    return rep


# -- projections -----------------------------------------------------------------


class ProjectionSpec:
    """Linear ``pi: Z -> Z`` onto the span of ``image_keys``."""

    def __init__(self, Z: MultiplierHopfAlgebra, image_keys, pi=None, name="pi"):
        if not Z.dense:
            raise UsageError("projections are supported on dense algebras only")
        self.Z = Z
        self.image_keys = sorted(image_keys, key=key_order)
        bad = [k for k in self.image_keys if k not in set(Z.window())]
        if bad:
            raise UsageError(f"image keys {bad} not in the basis of {Z.name}")
        img = set(self.image_keys)
        self._pi = pi or (lambda z: Z.alg.key(z) if z in img else Vec.zero(Z.field))
        self.name = name

    def pi_key(self, z) -> Vec:
        return self._pi(z)

    def __call__(self, v: Vec) -> Vec:
        out = Vec.zero(self.Z.field)
        for k, c in v.terms.items():
            out = out + self.pi_key(k).scale(c)
        return out

    def on_legs(self, t: Vec, legs) -> Vec:
        for leg in legs:
            t = map_legs(t, leg, 1, self.pi_key, 1)
        return t


def sub_mha(Z: MultiplierHopfAlgebra, keys, name=None) -> MultiplierHopfAlgebra:
    """Restriction of a dense Hopf algebra to a basis subset closed under everything."""
    keys = sorted(keys, key=key_order)
    ks = set(keys)
    zalg = Z.alg

    def rule(a, b):
        out = zalg.product(a, b)
        if any(k not in ks for k in out):
            raise UsageError(f"{keys} is not closed under the product")
        return out

    alg = DenseAlgebra(keys, Z.field, rule=rule, name=name or f"sub({Z.name})")
    return dense_mha(alg, Z.classical, Z.counit, lambda k: Z.S(k).element, name=alg.name)


def check_projection(ps: ProjectionSpec, domain=None) -> CheckReport:
    """Idempotency, multiplicativity, image, fixed points and comultiplicativity.

    ``domain`` lists the ``z`` keys quantified over (default: all of Z).
    """
    Z = ps.Z
    zs = list(domain) if domain is not None else Z.window()
    ys = ps.image_keys
    rep = CheckReport("projection", window=f"z over {len(zs)} keys")
    alg = Z.alg
    for a, b in itertools.product(ys, repeat=2):
        prod = alg.mul_keys(a, b)
        rep.checked += 1
        rep.clause("image is a subalgebra", all(k in set(ys) for k in prod.terms))
    for z in zs:
        pz = ps.pi_key(z)
        rep.check("idempotent", ps(pz), pz, (z,))
    for z, w in itertools.product(zs, repeat=2):
        rep.check("multiplicative", ps(alg.mul_keys(z, w)), alg.mul(ps.pi_key(z), ps.pi_key(w)), (z, w))
    ech = Echelon(Z.field, key_order)
    for z in Z.window():
        ech.add(ps.pi_key(z).coords())
    target = Echelon(Z.field, key_order)
    for y in ys:
        target.add(alg.key(y).coords())
    rep.checked += 1
    same = ech.dim == target.dim and all(ech.contains(alg.key(y).coords()) for y in ys)
    if same:
        rep.clause("image", True)
    else:
        rep.fail("image", {"image_keys": ys}, ech.dim, target.dim)
    for y in ys:
        rep.check("fixed points", ps.pi_key(y), alg.key(y), (y,))
    for z, y in itertools.product(zs, ys):
        pz = ps.pi_key(z)
        Y = alg.key(y)
        lhs = Z.apply("dR", pz, Y)
        rhs = ps.on_legs(Z.dR(z, y), (0, 1))
        rep.check("comultiplicative (1(x)y)", lhs, rhs, (z, y))
        lhs = Z.apply("dRp", pz, Y)
        rhs = ps.on_legs(Z.dRp(z, y), (0, 1))
        rep.check("comultiplicative (y(x)1)", lhs, rhs, (z, y))
    return rep


def build_induced_coaction(cc_global: Coaction, ps: ProjectionSpec, name=None) -> Coaction:
    """``beta = (id (x) pi)rho`` on the image of ``pi``."""
    if ps.Z is not cc_global.Y:
        raise UsageError("the projection must act on the coacted algebra")
    Y = sub_mha(ps.Z, ps.image_keys, name=f"im({ps.name})")
    cc = Coaction(Y, cc_global.A,
                  lambda y, a: ps.on_legs(cc_global.rR(y, a), (1,)),
                  lambda y, a: ps.on_legs(cc_global.rL(y, a), (1,)),
                  name=name or f"(id(x){ps.name})rho")
    cc.parent = cc_global
    cc.projection = ps
    return cc


def check_induction_hypotheses(cc_global: Coaction, ps: ProjectionSpec, t: Vec, quantify_over="Z") -> CheckReport:
    """Hypotheses (i)-(iii) for the induced coaction, with ``z`` ranging over Z or over Y."""
    if quantify_over not in ("Z", "Y"):
        raise UsageError("quantify_over must be 'Z' or 'Y'")
    Z, A = ps.Z, cc_global.A
    zs = Z.window() if quantify_over == "Z" else ps.image_keys
    rep = CheckReport("induction_hypotheses", window=f"z over {quantify_over} ({len(zs)} keys)")
    rep.data["quantify_over"] = quantify_over
    et = Z.eps(t)
    if et != 1:
        return rep.precondition_failed(f"eps_Y(t) = {Z.field.fmt(et)}, expected 1")
    rep.merge(check_projection(ps, domain=zs), prefix="(i)")
    for z in zs:
        pz = ps.pi_key(z)
        for a in A.window():
            av = A.alg.key(a)
            lhs = ps.on_legs(cc_global.T(pz, av), (1,))
            rep.check("(ii)", lhs, ps.on_legs(cc_global.rR(z, a), (1,)), (z, a))
            rhs = Vec.zero(Z.field, 2)
            for (z1, z2), c in Z.classical(z).terms.items():
                e = Z.eps(ps(Z.alg.mul(Z.alg.key(z1), t)))
                if e:
                    rhs = rhs + ps.on_legs(cc_global.rR(z2, a), (1,)).scale(c * e)
            rep.check("(iii)", lhs, rhs, (z, a))
    return rep


def group_coaction(Y, A, subgroup=None, name=None) -> Coaction:
    """``rho(h) = sum_{g in N} delta_g (x) hg`` for Y = kG over A = A_G."""
    G = A.group
    N = set(subgroup) if subgroup is not None else set(G.elements)
    F = A.field

    def r(y, a):
        if a not in N:
            return Vec.zero(F, 2)
        return Vec.basis((a, G.op(y, a)), F, 2)

    return Coaction(Y, A, r, r, name=name or "sum_g delta_g(x)hg")
