"""Concrete algebras and multiplier Hopf algebras used by the gallery."""

from __future__ import annotations

import itertools
from fractions import Fraction

from .algebra import DenseAlgebra, RuleAlgebra, Vec, key_order, tensor, tensor_mul
from .errors import UsageError
from .exact import Field
from .mhopf import MultiplierHopfAlgebra, dense_mha
from .multiplier import Multiplier, mul


# -- finite groups --------------------------------------------------------------


class Group:
    def __init__(self, name, elements, op, identity, inverse):
        self.name = name
        self.elements = sorted(elements, key=key_order)
        self.op = op
        self.e = identity
        self.inv = inverse

    def is_subgroup(self, subset):
        s = set(subset)
        return self.e in s and all(self.op(a, self.inv(b)) in s for a in s for b in s)

    def __repr__(self):
        return self.name


def cyclic(n: int) -> Group:
    if n < 1:
        raise UsageError("cyclic group order must be positive")
    return Group(f"Z{n}", range(n), lambda a, b: (a + b) % n, 0, lambda a: (-a) % n)


def symmetric3() -> Group:
    """S3 as permutation tuples; ``(g*k)(i) = g(k(i))``."""
    els = list(itertools.permutations(range(3)))

    def op(g, k):
        return tuple(g[k[i]] for i in range(3))

    def inv(g):
        r = [0] * 3
        for i, gi in enumerate(g):
            r[gi] = i
        return tuple(r)

    return Group("S3", els, op, (0, 1, 2), inv)


TRANSPOSITION = (1, 0, 2)
THREE_CYCLE = (1, 2, 0)


def group_by_name(name: str) -> Group:
    if name == "S3":
        return symmetric3()
    if name.startswith("Z") and name[1:].isdigit():
        return cyclic(int(name[1:]))
    raise UsageError(f"unknown group {name!r} (use Zn or S3)")


def parse_group_element(G: Group, s):
    if isinstance(s, (list, tuple)):
        s = tuple(s)
    elif isinstance(s, str) and G.name == "S3":
        s = tuple(int(c) for c in s.strip("()").split(",")) if "," in s else {"e": G.e}.get(s, s)
    elif isinstance(s, str):
        s = int(s)
    if s not in G.elements:
        raise UsageError(f"{s!r} is not an element of {G.name}")
    return s


# -- A_G and kG -----------------------------------------------------------------


def function_algebra(G: Group, field: Field) -> MultiplierHopfAlgebra:
    """A_G: delta functions, pointwise product, Delta(d_g) = sum_{pq=g} d_p (x) d_q."""
    alg = DenseAlgebra(G.elements, field, rule=lambda a, b: {a: 1} if a == b else {},
                       name=f"A_{G.name}", commutative_hint=True)

    def delta(g):
        return Vec({(p, G.op(G.inv(p), g)): field.one for p in G.elements}, field, 2)

    mha = dense_mha(alg, delta, lambda g: 1 if g == G.e else 0, lambda g: alg.key(G.inv(g)), name=f"A_{G.name}")
    mha.group = G
    return mha


def group_algebra(G: Group, field: Field) -> MultiplierHopfAlgebra:
    alg = DenseAlgebra(G.elements, field, rule=lambda a, b: {G.op(a, b): 1}, name=f"k{G.name}",
                       commutative_hint=all(G.op(a, b) == G.op(b, a) for a in G.elements for b in G.elements))
    mha = dense_mha(alg, lambda g: Vec.basis((g, g), field, 2), lambda g: 1, lambda g: alg.key(G.inv(g)),
                    name=f"k{G.name}")
    mha.group = G
    return mha


def indicator(mha, subset) -> Vec:
    """Sum of delta functions over ``subset`` inside A_G."""
    return Vec({g: mha.field.one for g in subset}, mha.field)


# -- Taft / Sweedler ----------------------------------------------------------------


def primitive_root_ok(q, n, field):
    q = field(q)
    powers = [q ** k for k in range(1, n + 1)]
    return powers[-1] == 1 and all(p != 1 for p in powers[:-1])


def taft(n: int, q, field: Field, name=None) -> MultiplierHopfAlgebra:
    """T_n(q): basis g^i x^j; g^n = 1, x^n = 0, xg = q gx, Delta(x) = x(x)1 + g(x)x."""
    q = field(q)
    if not primitive_root_ok(q, n, field):
        raise UsageError(f"q={field.fmt(q)} is not a primitive {n}th root of unity in {field}")
    basis = [(i, j) for i in range(n) for j in range(n)]

    def rule(a, b):
        (i, j), (k, l) = a, b
        if j + l >= n:
            return {}
        return {((i + k) % n, j + l): q ** (j * k)}

    label = name or ("H4" if n == 2 else f"T{n}({q.v if field.kind == 'prime' else q})")
    alg = DenseAlgebra(basis, field, rule=rule, name=label)
    algs = [alg, alg]
    one = alg.key((0, 0))
    g, x = alg.key((1, 0)), alg.key((0, 1))
    dg = tensor(g, g)
    dx = tensor(x, one) + tensor(g, x)

    def delta(a):
        i, j = a
        out = tensor(one, one)
        for _ in range(i):
            out = tensor_mul(out, dg, algs)
        for _ in range(j):
            out = tensor_mul(out, dx, algs)
        return out

    ginv = alg.key(((n - 1) % n, 0))
    Sx = alg.mul(ginv, x).scale(-1)

    def antipode(a):
        i, j = a
        out = one
        for _ in range(j):
            out = alg.mul(out, Sx)
        for _ in range(i):
            out = alg.mul(out, ginv)
        return out

    mha = dense_mha(alg, delta, lambda a: 1 if a[1] == 0 else 0, antipode, name=label)
    mha.taft_q = q
    mha.taft_n = n
    return mha


def sweedler(field: Field) -> MultiplierHopfAlgebra:
    if field.characteristic == 2:
        raise UsageError("the Sweedler algebra needs characteristic different from 2")
    return taft(2, -1, field, name="H4")


def z_element(family: str, alpha, field: Field, q=None) -> Vec:
    """The idempotent-like elements z of the Sweedler and Taft examples."""
    alpha = field(alpha)
    if family == "sweedler":
        if field.characteristic == 2:
            raise UsageError("z needs 2 invertible")
        half = field(Fraction(1, 2))
        return Vec({(0, 0): half, (1, 0): half, (1, 1): alpha}, field)
    if family == "taft":
        if field.characteristic == 3:
            raise UsageError("z needs 3 invertible")
        if field.kind == "prime" and field.p % 3 != 1:
            raise UsageError(f"F_{field.p} has no primitive cube root of unity (need p = 1 mod 3)")
        if q is None or not primitive_root_ok(q, 3, field):
            raise UsageError("taft z needs a primitive cube root of unity q")
        q = field(q)
        third = field(Fraction(1, 3))
        t = {(0, 0): third, (1, 0): third, (2, 0): third}
        t[(1, 1)] = third * (q - 1) * alpha
        t[(2, 1)] = third * (q * q - 1) * alpha
        t[(1, 2)] = third * (-3) * q * alpha * alpha
        return Vec(t, field)
    raise UsageError(f"unknown z family {family!r}")


# -- A_Z, the rule backend function algebra --------------------------------------


def a_z(field: Field, radius=4) -> MultiplierHopfAlgebra:
    """Finitely supported functions on Z; non-unital."""
    window = list(range(-radius, radius + 1))
    alg = RuleAlgebra(field, lambda a, b: {a: 1} if a == b else {}, window,
                      valid=lambda k: isinstance(k, int), around=lambda k: [k], name="A_Z",
                      commutative_hint=True, window_desc=f"|p|<={radius}")
    alg.expand = lambda keys: range(min(keys) - 2, max(keys) + 3)
    one = field.one

    def b2(x, y):
        return Vec({(x, y): one}, field, 2)

    mha = MultiplierHopfAlgebra(
        alg,
        dR=lambda p, b: b2(p - b, b),
        dL=lambda p, b: b2(b, p - b),
        dRp=lambda p, b: b2(b, p - b),
        dLp=lambda p, b: b2(p - b, b),
        counit=lambda p: 1 if p == 0 else 0,
        antipode=lambda p: alg.key(-p),
        name="A_Z",
        T1inv=lambda x, y: b2(x + y, y),
        T2inv=lambda x, y: b2(x, x + y),
        flip_inverses=(lambda x, y: b2(x + y, y), lambda x, y: b2(x, x + y)),
    )
    return mha


def periodic_indicator(mha, m: int) -> Multiplier:
    """The multiplier ``1_{mZ}`` of A_Z with its coproduct ``h(p+q)``."""
    alg = mha.alg
    F = mha.field

    def act(v):
        return Vec({k: c for k, c in v.terms.items() if k % m == 0}, F)

    def dact(t):
        return Vec({(p, q): c for (p, q), c in t.terms.items() if (p + q) % m == 0}, F, 2)

    return Multiplier(act, act, alg, f"1_{m}Z", delta=(dact, dact), counit=F.one)


# -- the e_p d^q algebra -------------------------------------------------------------


def gauss_binomial(n, k, v, field):
    """Gaussian binomial [n choose k]_v computed by Pascal's rule."""
    row = [field.one]
    for m in range(1, n + 1):
        new = [field.one] * (m + 1)
        for j in range(1, m):
            new[j] = row[j - 1] + v ** j * row[j]
        row = new
    return row[k]


def epdq(lam, field: Field, pmax=3, qmax=3) -> MultiplierHopfAlgebra:
    """Basis e_p d^q (p in Z, q >= 0); de_p = e_{p+1}d, e_pe_r = delta_{pr}e_p.

    Delta(e_p) = sum_r e_r (x) e_{p-r}, Delta(d) = d (x) c + 1 (x) d with
    c = sum_r lam^r e_r.  Expanding Delta(e_p)Delta(d)^q gives the closed form
    sum_{r,k} [q,k]_{1/lam} lam^{k(p-r)} e_r d^k (x) e_{p-r} d^{q-k}; each
    covering picks a single r.
    """
    lam = field(lam)
    if not lam:
        raise UsageError("lambda must be nonzero")
    linv = field.one / lam

    def rule(a, b):
        (p, q), (r, s) = a, b
        return {(p, q + s): 1} if p == r + q else {}

    def valid(k):
        return isinstance(k, tuple) and len(k) == 2 and k[1] >= 0

    def around(k):
        p, q = k
        return [(p, 0), (p - q, 0)]

    window = [(p, q) for p in range(-pmax, pmax + 1) for q in range(qmax + 1)]
    alg = RuleAlgebra(field, rule, window, valid=valid, around=around, name=f"A_epdq(lambda={field.fmt(lam)})",
                      window_desc=f"|p|<={pmax}, q<={qmax}")
    alg.expand = lambda keys: [(p, q) for p in range(min(k[0] for k in keys) - qmax - 3,
                                                     max(k[0] for k in keys) + qmax + 4) for q in range(qmax + 1)]

    binom = {}

    def coeff(q, k, p_minus_r):
        b = binom.get((q, k))
        if b is None:
            b = binom[(q, k)] = gauss_binomial(q, k, linv, field)
        return b * lam ** (k * p_minus_r)

    def two(pairs):
        t = {}
        for key, c in pairs:
            if c:
                t[key] = t.get(key, 0) + c
        return Vec(t, field, 2)

    def dR(a, b):
        (p, q), (t, u) = a, b
        out = []
        for k in range(q + 1):
            r = p - t - (q - k)
            out.append((((r, k), (p - r, q - k + u)), coeff(q, k, p - r)))
        return two(out)

    def dL(a, b):
        (p, q), (t, u) = a, b
        r = t - u
        return two((((t, u + k), (p - r, q - k)), coeff(q, k, p - r)) for k in range(q + 1))

    def dRp(a, b):
        (p, q), (t, u) = a, b
        out = []
        for k in range(q + 1):
            r = t + k
            out.append((((r, k + u), (p - r, q - k)), coeff(q, k, p - r)))
        return two(out)

    def dLp(a, b):
        (p, q), (t, u) = a, b
        r = p + u - t
        return two((((r, k), (t, u + q - k)), coeff(q, k, p - r)) for k in range(q + 1))

    # multipliers d and c^s
    def d_left(v):
        return Vec({(r + 1, m + 1): c for (r, m), c in v.terms.items()}, field)

    def d_right(v):
        return Vec({(r, m + 1): c for (r, m), c in v.terms.items()}, field)

    def c_power(s):
        return Multiplier(lambda v: Vec({(r, m): c * lam ** (s * r) for (r, m), c in v.terms.items()}, field),
                          lambda v: Vec({(r, m): c * lam ** (s * (r - m)) for (r, m), c in v.terms.items()},
                                        field),
                          alg, f"c^{s}", counit=field.one)

    d_mult = Multiplier(d_left, d_right, alg, "d", counit=field.zero)

    def elem_mult(k):
        from .multiplier import embed

        return embed(alg.key(k), alg)

    minus_one = Multiplier(lambda v: v.scale(-1), lambda v: v.scale(-1), alg, "-1")
    S_d = mul(minus_one, mul(d_mult, c_power(-1)))

    def antipode(a):
        p, q = a
        m = elem_mult((-p, 0))
        for _ in range(q):
            m = mul(S_d, m)
        return m

    def S_closed(s, j):
        """S(e_s d^j) = (-1)^j lam^{js - j(j-1)/2} e_{j-s} d^j."""
        return (j - s, j), (-1) ** j * lam ** (j * s - j * (j - 1) // 2)

    def T1inv(a, b):
        # a1 (x) S(a2) b with a2 = e_{-t} d^{q-k}: r = p + t
        (p, q), (t, u) = a, b
        out = []
        for k in range(q + 1):
            r = p + t
            (sp, sq), sc = S_closed(-t, q - k)
            # S(a2) = sc e_sp d^sq, times e_t d^u requires sp = t + sq
            if sp == t + sq:
                out.append((((r, k), (sp, sq + u)), coeff(q, k, p - r) * sc))
        return two(out)

    def T2inv(a, b):
        # a S(b1) (x) b2, b1 = e_r d^k with r = k + u - t
        (t, u), (p, q) = a, b
        out = []
        for k in range(q + 1):
            r = k + u - t
            (sp, sq), sc = S_closed(r, k)
            if t == sp + u:
                out.append((((t, u + sq), (p - r, q - k)), coeff(q, k, p - r) * sc))
        return two(out)

    mha = MultiplierHopfAlgebra(alg, dR, dL, dRp, dLp, lambda a: 1 if a == (0, 0) else 0, antipode,
                                name=alg.name, T1inv=T1inv, T2inv=T2inv)
    mha.lam = lam
    mha.c_power = c_power
    mha.d_mult = d_mult
    mha.S_closed = S_closed
    return mha
