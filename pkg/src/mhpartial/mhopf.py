"""Multiplier Hopf algebras through their covered comultiplication.

Only the four coverings of ``Delta(a)`` are stored::

    dR(a, b)  = Delta(a)(1 (x) b)      dL(a, b)  = (b (x) 1)Delta(a)
    dRp(a, b) = Delta(a)(b (x) 1)      dLp(a, b) = (1 (x) b)Delta(a)

All of them take basis keys and return two-leg :class:`Vec` objects.
"""

from __future__ import annotations

import functools
import itertools
import random

from .algebra import (Algebra, DenseAlgebra, TensorAlgebra, Vec, contract_leg, flip, key_order, linear,
                      map_legs, tensor, tensor_mul)
from .errors import UnsupportedStructure, UsageError
from .exact import Echelon, solve_sparse
from .multiplier import Multiplier, as_multiplier, embed, realize
from .report import CheckReport


class MultiplierHopfAlgebra:
    def __init__(self, alg: Algebra, dR, dL, dRp, dLp, counit, antipode, name="", T1inv=None, T2inv=None,
                 flip_inverses=None, delta=None):
        self.alg = alg
        self.field = alg.field
        self.name = name or alg.name
        self._maps = {"dR": dR, "dL": dL, "dRp": dRp, "dLp": dLp}
        self._cache = {}
        self._counit = counit
        self._antipode = antipode
        self._S = {}
        self.T1inv = T1inv
        self.T2inv = T2inv
        self.flip_inverses = flip_inverses
        self.classical = delta  # key -> two-leg Vec, only for unital algebras

    # -- covered maps -------------------------------------------------------

    def covered(self, which, a, b) -> Vec:
        ck = (which, a, b)
        r = self._cache.get(ck)
        if r is None:
            r = self._maps[which](a, b)
            self._cache[ck] = r
        return r

    def dR(self, a, b):
        return self.covered("dR", a, b)

    def dL(self, a, b):
        return self.covered("dL", a, b)

    def dRp(self, a, b):
        return self.covered("dRp", a, b)

    def dLp(self, a, b):
        return self.covered("dLp", a, b)

    def apply(self, which, x: Vec, y: Vec) -> Vec:
        """Bilinear extension of a covered map to elements."""
        out = linear(lambda a, b: self.covered(which, a, b), self.field, x, y)
        return out if out is not None else Vec.zero(self.field, 2)

    def T1(self, a: Vec, b: Vec):
        """``Delta(a)(1 (x) b)``."""
        return self.apply("dR", a, b)

    def T2(self, a: Vec, b: Vec):
        """``(a (x) 1)Delta(b)``."""
        return self.apply("dL", b, a)

    def act_left(self, a, t: Vec) -> Vec:
        """``Delta(a) t`` for a basis key ``a`` and a two-leg tensor ``t``."""
        out = Vec.zero(self.field, 2)
        for (x, y), c in t.terms.items():
            out = out + self.alg.right_mul_leg(self.dRp(a, x), self.alg.key(y), 1).scale(c)
        return out

    def act_right(self, t: Vec, a) -> Vec:
        """``t Delta(a)``."""
        out = Vec.zero(self.field, 2)
        for (x, y), c in t.terms.items():
            out = out + self.alg.left_mul_leg(self.dL(a, x), self.alg.key(y), 1).scale(c)
        return out

    def delta_left(self, x: Vec, t: Vec) -> Vec:
        out = Vec.zero(self.field, 2)
        for a, c in x.terms.items():
            out = out + self.act_left(a, t).scale(c)
        return out

    def delta_right(self, t: Vec, x: Vec) -> Vec:
        out = Vec.zero(self.field, 2)
        for a, c in x.terms.items():
            out = out + self.act_right(t, a).scale(c)
        return out

    # -- counit and antipode ----------------------------------------------

    def counit(self, a):
        return self.field(self._counit(a))

    def eps(self, x: Vec):
        s = self.field.zero
        for k, c in x.terms.items():
            s = s + c * self.counit(k)
        return s

    def S(self, a) -> Multiplier:
        m = self._S.get(a)
        if m is None:
            m = as_multiplier(self._antipode(a), self.alg)
            self._S[a] = m
        return m

    def window(self):
        return self.alg.window()

    @property
    def dense(self):
        return self.alg.dense


def dense_mha(alg: DenseAlgebra, delta, counit, antipode, name="") -> MultiplierHopfAlgebra:
    """Build the covered maps of a unital algebra from a classical coproduct.

    ``delta(k)`` is a two-leg Vec, ``counit(k)`` a scalar, ``antipode(k)`` a Vec.
    """
    cache = {}

    def D(a):
        r = cache.get(a)
        if r is None:
            r = cache[a] = delta(a)
        return r

    algs = [alg, alg]
    one = alg.unit()
    if one is None:
        raise UsageError(f"{alg.name}: a dense Hopf algebra must be unital")

    def dR(a, b):
        return tensor_mul(D(a), tensor(one, alg.key(b)), algs)

    def dL(a, b):
        return tensor_mul(tensor(alg.key(b), one), D(a), algs)

    def dRp(a, b):
        return tensor_mul(D(a), tensor(alg.key(b), one), algs)

    def dLp(a, b):
        return tensor_mul(tensor(one, alg.key(b)), D(a), algs)

    return MultiplierHopfAlgebra(alg, dR, dL, dRp, dLp, counit, antipode, name=name, delta=D)


def tensor_mha(parts, name="") -> MultiplierHopfAlgebra:
    """Tensor product; coverings, counit and antipode act leg by leg."""
    fields = {p.field for p in parts}
    if len(fields) != 1:
        raise UsageError("tensor factors over different fields")
    alg = TensorAlgebra([p.alg for p in parts], name=name or "(x)".join(p.name for p in parts))
    field = alg.field

    def combine(which):
        def f(a, b):
            res = {((), ()): field.one}
            for p, x, y in zip(parts, a, b):
                img = p.covered(which, x, y)
                if not img:
                    return Vec.zero(field, 2)
                res2 = {}
                for (l, r), c in res.items():
                    for (u, v), c2 in img.terms.items():
                        k = (l + (u,), r + (v,))
                        res2[k] = res2.get(k, 0) + c * c2
                res = res2
            return Vec(res, field, 2)

        return f

    def counit(a):
        c = field.one
        for p, x in zip(parts, a):
            c = c * p.counit(x)
        return c

    def antipode(a):
        ms = [p.S(x) for p, x in zip(parts, a)]
        if all(m.element is not None for m in ms):
            return Vec(tensor(*[m.element for m in ms]).terms, field, 1)

        def act(side):
            def go(v):
                out = {}
                for key, c in v.terms.items():
                    imgs = [getattr(m, side)(p.alg.key(k)) for m, p, k in zip(ms, parts, key)]
                    for kk, cc in tensor(*imgs).terms.items():
                        out[kk] = out.get(kk, 0) + c * cc
                return Vec(out, field, 1)

            return go

        return Multiplier(act("left"), act("right"), alg, f"S{a}")

    delta = None
    if all(p.classical is not None for p in parts):
        delta = functools.partial(combine_classical, parts, field=field)

    return MultiplierHopfAlgebra(alg, combine("dR"), combine("dL"), combine("dRp"), combine("dLp"), counit,
                                 antipode, name=alg.name, delta=delta)


def combine_classical(parts, a, field):
    res = {((), ()): field.one}
    for p, x in zip(parts, a):
        res2 = {}
        for (l, r), c in res.items():
            for (u, v), c2 in p.classical(x).terms.items():
                k = (l + (u,), r + (v,))
                res2[k] = res2.get(k, 0) + c * c2
        res = res2
    return Vec(res, field, 2)


# -- sampling -------------------------------------------------------------------


def window_pairs(keys):
    return list(itertools.product(keys, repeat=2))


def window_triples(alg, keys, samples, seed):
    """All triples for dense algebras; ``samples`` seeded draws otherwise."""
    if alg.dense:
        return list(itertools.product(keys, repeat=3))
    rng = random.Random(seed)
    return [tuple(rng.choice(keys) for _ in range(3)) for _ in range(samples)]


def _rep(name, mha, seed=0):
    return CheckReport(name, window=mha.alg.describe_window(), seed=seed)


# -- suites ---------------------------------------------------------------------


def check_coassociativity(mha, window=None, samples=200, seed=0) -> CheckReport:
    """``(a(x)1(x)1)(Delta(x)id)(Delta(b)(1(x)c)) = ((id(x)Delta)((a(x)1)Delta(b)))(1(x)1(x)c)``."""
    rep = _rep("coassociativity", mha, seed)
    keys = list(window) if window is not None else mha.window()
    for a, b, c in window_triples(mha.alg, keys, samples, seed):
        lhs = map_legs(mha.dR(b, c), 0, 1, lambda x: mha.dL(x, a), 2)
        rhs = map_legs(mha.dL(b, a), 1, 1, lambda v: mha.dR(v, c), 2)
        rep.check("coassociativity", lhs, rhs, (a, b, c))
    return rep


def check_counit(mha, window=None, **_) -> CheckReport:
    rep = _rep("counit", mha)
    keys = list(window) if window is not None else mha.window()
    alg = mha.alg
    for a, b in window_pairs(keys):
        ab = alg.mul(alg.key(a), alg.key(b))
        rep.check("(eps(x)id)(Delta(a)(1(x)b)) = ab", contract_leg(mha.dR(a, b), 0, mha.counit), ab, (a, b))
        rep.check("(id(x)eps)((a(x)1)Delta(b)) = ab", contract_leg(mha.dL(b, a), 1, mha.counit), ab, (a, b))
    return rep


def check_antipode(mha, window=None, **_) -> CheckReport:
    rep = _rep("antipode", mha)
    keys = list(window) if window is not None else mha.window()
    alg = mha.alg
    F = mha.field
    for a, b in window_pairs(keys):
        lhs = Vec.zero(F)
        for (x, y), c in mha.dR(a, b).terms.items():
            lhs = lhs + mha.S(x).left(alg.key(y)).scale(c)
        rep.check("m(S(x)id)(Delta(a)(1(x)b)) = eps(a)b", lhs, alg.key(b).scale(mha.counit(a)), (a, b))
        lhs = Vec.zero(F)
        for (u, v), c in mha.dL(b, a).terms.items():
            lhs = lhs + mha.S(v).right(alg.key(u)).scale(c)
        rep.check("m(id(x)S)((a(x)1)Delta(b)) = eps(b)a", lhs, alg.key(a).scale(mha.counit(b)), (a, b))
    return rep


def check_delta_hom(mha, window=None, samples=200, seed=0) -> CheckReport:
    """``Delta(aa')(1(x)b) = Delta(a)(Delta(a')(1(x)b))`` and agreement of the coverings."""
    rep = _rep("delta_homomorphism", mha, seed)
    keys = list(window) if window is not None else mha.window()
    alg = mha.alg
    for a, a2, b in window_triples(alg, keys, samples, seed):
        lhs = mha.apply("dR", alg.mul(alg.key(a), alg.key(a2)), alg.key(b))
        rhs = mha.act_left(a, mha.dR(a2, b))
        rep.check("multiplicative", lhs, rhs, (a, a2, b))
        # Delta(a)(x (x) y) computed through two different coverings
        full1 = alg.right_mul_leg(mha.dRp(a, a2), alg.key(b), 1)
        full2 = alg.right_mul_leg(mha.dR(a, b), alg.key(a2), 0)
        rep.check("right coverings agree", full1, full2, (a, a2, b))
        full3 = alg.left_mul_leg(mha.dL(a, a2), alg.key(b), 1)
        full4 = alg.left_mul_leg(mha.dLp(a, b), alg.key(a2), 0)
        rep.check("left coverings agree", full3, full4, (a, a2, b))
    return rep


def _matrix_rank(columns, field):
    ech = Echelon(field, key_order)
    for col in columns:
        ech.add(col.coords())
    return ech.dim


def _bijective_dense(rep, mha, maps):
    keys = mha.window()
    n = len(keys) ** 2
    for name, fn in maps:
        cols = [fn(a, b) for a, b in window_pairs(keys)]
        r = _matrix_rank(cols, mha.field)
        rep.data[f"rank {name}"] = r
        rep.data[f"dim {name}"] = n
        rep.checked += 1
        if r == n:
            rep.clause(f"{name} bijective", True)
        else:
            rep.fail(f"{name} bijective", {"map": name}, r, n)


def apply_pairwise(fn, t: Vec):
    out = Vec.zero(t.field, 2)
    for (x, y), c in t.terms.items():
        out = out + fn(x, y).scale(c)
    return out


def _check_inverse(rep, mha, name, fn, inv, pairs):
    F = mha.field
    for a, b in pairs:
        ab = Vec.basis((a, b), F, 2)
        rep.check(f"{name} inverse (left)", apply_pairwise(inv, fn(a, b)), ab, (a, b))
        rep.check(f"{name} inverse (right)", apply_pairwise(fn, inv(a, b)), ab, (a, b))


def _t_maps(mha, flipped=False):
    if not flipped:
        return [("T1", lambda a, b: mha.dR(a, b)), ("T2", lambda a, b: mha.dL(b, a))]
    return [("T1'", lambda a, b: flip(mha.dRp(a, b))), ("T2'", lambda a, b: flip(mha.dLp(b, a)))]


def check_bijective_T(mha, window=None, flipped=False, **_) -> CheckReport:
    rep = _rep("regular" if flipped else "bijective_T", mha)
    maps = _t_maps(mha, flipped)
    if mha.dense:
        _bijective_dense(rep, mha, maps)
        return rep
    inverses = mha.flip_inverses if flipped else (
        (mha.T1inv, mha.T2inv) if mha.T1inv is not None and mha.T2inv is not None else None)
    keys = list(window) if window is not None else mha.window()
    if inverses is None:
        for name, _ in maps:
            rep.inconclusive(f"{name} bijective", "no inverse rule declared")
        return rep
    for (name, fn), inv in zip(maps, inverses):
        _check_inverse(rep, mha, name, fn, inv, window_pairs(keys))
    return rep


def check_regular(mha, window=None, **kw) -> CheckReport:
    return check_bijective_T(mha, window, flipped=True)


def _merged(name, fns, mha, window, samples, seed):
    rep = CheckReport(name, window=mha.alg.describe_window(), seed=seed)
    for fn in fns:
        sub = fn(mha, window, samples=samples, seed=seed)
        rep.merge(sub)
        rep.data.update({f"{sub.suite}.{k}": v for k, v in sub.data.items()})
    return rep


def check_hopf(mha, window=None, samples=200, seed=0) -> CheckReport:
    """All Hopf suites merged."""
    fns = (check_coassociativity, check_counit, check_antipode, check_delta_hom, check_bijective_T)
    return _merged("hopf", fns, mha, window, samples, seed)


def check_bialgebra_structure(mha, window=None, samples=200, seed=0) -> CheckReport:
    """Coassociativity, counit and multiplicativity; no antipode involved."""
    return _merged("bialgebra", (check_coassociativity, check_counit, check_delta_hom), mha, window, samples, seed)


# -- Delta on multipliers ---------------------------------------------------------


def extend_delta(mha, h):
    """Actions ``(t -> Delta(h)t, t -> tDelta(h))`` on two-leg tensors.

    Realized multipliers use the covered comultiplication directly; dense
    algebras otherwise decompose ``t`` through the inverse of ``T1``/``T2``;
    rule multipliers need their own declared actions.
    """
    alg = mha.alg
    if isinstance(h, Vec):
        h = embed(h, alg)
    x = h.element
    if x is None and alg.dense:
        x = realize(h)
    if x is not None:
        return (lambda t: mha.delta_left(x, t), lambda t: mha.delta_right(t, x))
    if h.delta is not None:
        return h.delta
    raise UnsupportedStructure(f"no extension of the comultiplication to {h.name}")


def extend_delta_by_decomposition(mha, h: Multiplier):
    """Dense-only: ``Delta(h)sum Delta(a_i)(1(x)b_i) = sum Delta(h a_i)(1(x)b_i)``."""
    alg = mha.alg
    if not alg.dense:
        raise UnsupportedStructure("decomposition needs a finite basis")
    pairs = window_pairs(alg.window())
    F = mha.field
    colsR = [mha.dR(a, b).coords() for a, b in pairs]
    colsL = [mha.dL(a, b).coords() for a, b in pairs]

    def left(t):
        x = solve_sparse(colsR, t.coords(), F, order=key_order)
        if x is None:
            raise UnsupportedStructure("T1 is not surjective")
        out = Vec.zero(F, 2)
        for (a, b), c in zip(pairs, x):
            if c:
                out = out + mha.apply("dR", h.left(alg.key(a)), alg.key(b)).scale(c)
        return out

    def right(t):
        x = solve_sparse(colsL, t.coords(), F, order=key_order)
        if x is None:
            raise UnsupportedStructure("T2 is not surjective")
        out = Vec.zero(F, 2)
        for (a, b), c in zip(pairs, x):
            if c:
                out = out + mha.apply("dL", h.right(alg.key(a)), alg.key(b)).scale(c)
        return out

    return left, right


def counit_of(mha, h, window=None):
    """``eps(h)`` from ``eps(ha) = eps(h)eps(a)``; None if inconsistent or undetermined."""
    if isinstance(h, Vec):
        return mha.eps(h)
    if h.element is not None:
        return mha.eps(h.element)
    keys = list(window) if window is not None else mha.window()
    value = None
    for a in keys:
        ea = mha.counit(a)
        if ea:
            v = mha.eps(h.left(mha.alg.key(a))) / ea
            if value is None:
                value = v
            elif v != value:
                return None
    return value
