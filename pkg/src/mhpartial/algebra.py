"""Basis-indexed algebras, finitely supported vectors and tensor legs.

A :class:`Vec` with ``legs == 1`` is keyed by plain basis keys; with
``legs == n > 1`` each key is an n-tuple of leg keys.  Algebras come in two
backends: :class:`DenseAlgebra` (finite basis, structure constants) and
:class:`RuleAlgebra` (a key-level product closure, checked on windows).
"""

from __future__ import annotations

import itertools

from .errors import UsageError, WindowExhausted
from .exact import Echelon, Field, solve_sparse
from .report import CheckReport


def key_order(k):
    """Total order on heterogeneous basis keys."""
    if isinstance(k, bool):
        return (0, int(k))
    if isinstance(k, int):
        return (0, k)
    if isinstance(k, str):
        return (1, k)
    if isinstance(k, tuple):
        return (2, tuple(key_order(x) for x in k))
    return (3, repr(k))


def _legs_of(key, legs):
    return (key,) if legs == 1 else key


def _join(parts):
    return parts[0] if len(parts) == 1 else tuple(parts)


class Vec:
    """Finitely supported combination of basis keys; zeros never stored."""

    __slots__ = ("terms", "field", "legs")

    def __init__(self, terms=None, field: Field = None, legs: int = 1):
        if field is None:
            raise UsageError("a Vec needs a field")
        self.field = field
        self.legs = legs
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, key, field, legs=1, coeff=1):
        return cls({key: field(coeff)}, field, legs)

    @classmethod
    def zero(cls, field, legs=1):
        return cls({}, field, legs)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: key_order(kv[0]))

    def keys(self):
        return [k for k, _ in self.items()]

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __getitem__(self, key):
        return self.terms.get(key, self.field.zero)

    def _same(self, other):
        if not isinstance(other, Vec):
            raise UsageError(f"cannot combine Vec with {type(other).__name__}")
        if other.field != self.field:
            raise UsageError(f"mixed fields {self.field} and {other.field}")
        if other.legs != self.legs and self.terms and other.terms:
            raise UsageError(f"mixed leg counts {self.legs} and {other.legs}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._same(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, 0) + c
        return Vec(t, self.field, max(self.legs, other.legs) if not self.terms else self.legs)

    __radd__ = __add__

    def __neg__(self):
        return Vec({k: -c for k, c in self.terms.items()}, self.field, self.legs)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field(c)
        if not c:
            return Vec.zero(self.field, self.legs)
        return Vec({k: c * v for k, v in self.terms.items()}, self.field, self.legs)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, Vec):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coords(self):
        """Sparse coordinate dict, for the linear-algebra kernel."""
        return dict(self.terms)

    def leg_keys(self, key):
        return _legs_of(key, self.legs)

    def to_json(self):
        from .report import render

        return [[render(k), self.field.fmt(c)] for k, c in self.items()]

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{self.field.fmt(c) if c != 1 else ''}[{k}]" for k, c in self.items())


def vec(field, pairs, legs=1):
    """Build a Vec from ``(key, coefficient)`` pairs, summing repeats."""
    t = {}
    for k, c in pairs:
        t[k] = t.get(k, 0) + field(c)
    return Vec(t, field, legs)


def tensor(*vs):
    """Tensor product; leg counts add up."""
    field = vs[0].field
    legs = sum(v.legs for v in vs)
    t = {}
    for combo in itertools.product(*(v.terms.items() for v in vs)):
        parts = []
        c = field.one
        for v, (k, x) in zip(vs, combo):
            parts.extend(_legs_of(k, v.legs))
            c = c * x
        key = _join(parts)
        t[key] = t.get(key, 0) + c
    return Vec(t, field, legs)


def map_legs(t: Vec, start: int, n: int, fn, out_legs: int):
    """Apply the key-level linear map ``fn`` to legs ``start..start+n-1``.

    ``fn`` receives the sub-key (plain key when ``n == 1``) and returns a Vec
    with ``out_legs`` legs.
    """
    legs = t.legs - n + out_legs
    res = {}
    for key, c in t.terms.items():
        lk = _legs_of(key, t.legs)
        pre, mid, post = lk[:start], lk[start:start + n], lk[start + n:]
        img = fn(_join(mid))
        for k2, c2 in img.terms.items():
            nk = _join(pre + _legs_of(k2, out_legs) + post)
            res[nk] = res.get(nk, 0) + c * c2
    return Vec(res, t.field, legs)


def contract_leg(t: Vec, i: int, functional):
    """Apply a scalar functional (key -> scalar) to leg ``i``."""
    res = {}
    for key, c in t.terms.items():
        lk = _legs_of(key, t.legs)
        f = functional(lk[i])
        if f:
            nk = _join(lk[:i] + lk[i + 1:]) if t.legs > 1 else ()
            res[nk] = res.get(nk, 0) + c * f
    return Vec(res, t.field, max(t.legs - 1, 1))


def scalar_of(v: Vec):
    """The coefficient left after contracting every leg (key ``()``)."""
    return v.terms.get((), v.field.zero)


def permute(t: Vec, perm):
    """Leg permutation: output leg i is input leg ``perm[i]``."""
    res = {}
    for key, c in t.terms.items():
        lk = _legs_of(key, t.legs)
        res[_join(tuple(lk[j] for j in perm))] = c
    return Vec(res, t.field, t.legs)


def flip(t: Vec):
    return permute(t, (1, 0))


def linear(fn, field, *vs):
    """Multilinear extension of a key-level function returning Vecs."""
    out = None
    for combo in itertools.product(*(v.terms.items() for v in vs)):
        c = field.one
        for _, x in combo:
            c = c * x
        img = fn(*(k for k, _ in combo)).scale(c)
        out = img if out is None else out + img
    return out


# -- algebras ---------------------------------------------------------------


class Algebra:
    """Common surface of the dense and rule backends."""

    dense = True
    commutative_hint = False

    def __init__(self, field: Field, name=""):
        self.field = field
        self.name = name
        self._cache = {}

    def product(self, a, b) -> dict:
        raise NotImplementedError

    def valid(self, k) -> bool:
        return k in self.window()

    def mul_keys(self, a, b) -> Vec:
        r = self._cache.get((a, b))
        if r is None:
            r = Vec({k: self.field(c) for k, c in self.product(a, b).items()}, self.field)
            self._cache[(a, b)] = r
        return r

    def mul(self, x: Vec, y: Vec) -> Vec:
        t = {}
        for a, ca in x.terms.items():
            for b, cb in y.terms.items():
                c = ca * cb
                for k, v in self.mul_keys(a, b).terms.items():
                    t[k] = t.get(k, 0) + c * v
        return Vec(t, self.field)

    def key(self, k, coeff=1) -> Vec:
        return Vec.basis(k, self.field, 1, coeff)

    def elem(self, pairs) -> Vec:
        return vec(self.field, pairs)

    def window(self):
        raise NotImplementedError

    def neighborhood(self, keys):
        """Keys needed as probes/units around ``keys`` (dense: whole basis)."""
        return self.window()

    def describe_window(self):
        return "full basis" if self.dense else "window"

    def unit(self):
        """Two-sided unit if the algebra has one on its (window) basis."""
        return find_local_unit(self, [self.key(k) for k in self.window()])

    def left_mul_leg(self, t: Vec, x: Vec, leg: int):
        """Multiply leg ``leg`` of tensor ``t`` by ``x`` from the left."""
        return map_legs(t, leg, 1, lambda k: self.mul(x, self.key(k)), 1)

    def right_mul_leg(self, t: Vec, x: Vec, leg: int):
        return map_legs(t, leg, 1, lambda k: self.mul(self.key(k), x), 1)


class DenseAlgebra(Algebra):
    """Finite basis with a structure-constant table.

    ``table`` maps ``(a, b)`` to a dict ``{k: coeff}``; missing pairs are 0.
    Alternatively pass ``rule`` computing the same dict.
    """

    def __init__(self, basis, field, table=None, rule=None, name="", commutative_hint=False):
        super().__init__(field, name)
        self.basis = sorted(basis, key=key_order)
        self._index = {k: i for i, k in enumerate(self.basis)}
        if len(self._index) != len(self.basis):
            raise UsageError("duplicate basis keys")
        self.table = table
        self.rule = rule
        self.commutative_hint = commutative_hint
        self._unit = None

    @property
    def dim(self):
        return len(self.basis)

    def product(self, a, b):
        if a not in self._index or b not in self._index:
            raise UsageError(f"key {a if a not in self._index else b!r} not in basis of {self.name}")
        if self.rule is not None:
            return self.rule(a, b)
        return self.table.get((a, b), {})

    def window(self):
        return list(self.basis)

    def index(self, k):
        return self._index[k]

    def valid(self, k) -> bool:
        return k in self._index

    def unit(self):
        if self._unit is None:
            self._unit = find_local_unit(self, [self.key(k) for k in self.basis])
        return self._unit


class RuleAlgebra(Algebra):
    """Possibly infinite basis; product given by a key-level rule.

    ``valid`` decides key membership; ``window_keys`` is the default sample
    window; ``around(keys)`` lists the keys acting as local units/probes.
    """

    dense = False

    def __init__(self, field, rule, window_keys, valid=None, around=None, name="", commutative_hint=False,
                 window_desc=""):
        super().__init__(field, name)
        self.rule = rule
        self._window = sorted(window_keys, key=key_order)
        self.valid = valid or (lambda k: True)
        self._around = around
        self.commutative_hint = commutative_hint
        self.window_desc = window_desc or f"{len(self._window)} keys"

    def product(self, a, b):
        out = self.rule(a, b)
        bad = [k for k in out if not self.valid(k)]
        if bad or not self.valid(a) or not self.valid(b):
            raise WindowExhausted(f"rule product left the key domain at {a!r}*{b!r}", bad or [a, b])
        return out

    def window(self):
        return list(self._window)

    def neighborhood(self, keys):
        if self._around is None:
            return list(keys)
        out = set(keys)
        for k in keys:
            out.update(self._around(k))
        return sorted(out, key=key_order)

    def describe_window(self):
        return self.window_desc


class TensorAlgebra(Algebra):
    """Componentwise product on tuple keys; dense iff every part is dense."""

    def __init__(self, parts, name=""):
        fields = {p.field for p in parts}
        if len(fields) != 1:
            raise UsageError("tensor legs over different fields")
        super().__init__(parts[0].field, name or "(x)".join(p.name for p in parts))
        self.parts = list(parts)
        self.dense = all(p.dense for p in parts)
        self.commutative_hint = all(p.commutative_hint for p in parts)
        if self.dense:
            self.basis = [tuple(k) for k in itertools.product(*(p.window() for p in parts))]
            self.basis.sort(key=key_order)
            self._unit = None

    @property
    def dim(self):
        return len(self.basis)

    def product(self, a, b):
        out = {(): self.field.one}
        for p, x, y in zip(self.parts, a, b):
            nxt = {}
            prod = p.mul_keys(x, y)
            if not prod:
                return {}
            for k0, c0 in out.items():
                for k1, c1 in prod.terms.items():
                    nk = k0 + (k1,)
                    nxt[nk] = nxt.get(nk, 0) + c0 * c1
            out = nxt
        return out

    def window(self):
        return [tuple(k) for k in itertools.product(*(p.window() for p in self.parts))]

    def valid(self, k) -> bool:
        return isinstance(k, tuple) and len(k) == len(self.parts) and all(
            p.valid(x) for p, x in zip(self.parts, k))

    def neighborhood(self, keys):
        per = [p.neighborhood(sorted({k[i] for k in keys}, key=key_order)) for i, p in enumerate(self.parts)]
        return [tuple(k) for k in itertools.product(*per)]

    def unit(self):
        units = [p.unit() for p in self.parts]
        if any(u is None for u in units):
            return None
        return tensor(*units)


def tensor_shape(parts):
    """Tensor algebra of the given algebras; ``None`` legs are plain vector spaces
    and make the result a leg-shape tuple without a product."""
    if any(p is None for p in parts):
        return tuple(parts)
    return TensorAlgebra(parts)


def tensor_mul(s: Vec, t: Vec, algs):
    """Leg-wise product of two tensors whose legs live in ``algs``."""
    field = s.field
    res = {}
    for ks, cs in s.terms.items():
        ls = _legs_of(ks, s.legs)
        for kt, ct in t.terms.items():
            lt = _legs_of(kt, t.legs)
            partial = {(): cs * ct}
            for alg, a, b in zip(algs, ls, lt):
                prod = alg.mul_keys(a, b)
                if not prod:
                    partial = {}
                    break
                partial = {k0 + (k1,): c0 * c1 for k0, c0 in partial.items() for k1, c1 in prod.terms.items()}
            for k, c in partial.items():
                nk = _join(k)
                res[nk] = res.get(nk, 0) + c
    return Vec(res, field, s.legs)


# -- checks -------------------------------------------------------------------


def check_associativity(alg: Algebra, samples=None) -> CheckReport:
    rep = CheckReport("associativity", window=alg.describe_window())
    keys = alg.window()
    triples = samples if samples is not None else itertools.product(keys, repeat=3)
    for a, b, c in triples:
        A, B, C = alg.key(a), alg.key(b), alg.key(c)
        rep.check("(ab)c=a(bc)", alg.mul(alg.mul(A, B), C), alg.mul(A, alg.mul(B, C)), (a, b, c))
    return rep


def check_nondegenerate(alg: Algebra, window=None) -> CheckReport:
    """No nonzero a in span(window) with a*b = 0 for all probe b (both sides)."""
    keys = list(window) if window is not None else alg.window()
    probes = alg.neighborhood(keys) if not alg.dense else alg.window()
    rep = CheckReport("nondegenerate", window=alg.describe_window())
    for side in ("left", "right"):
        cols = []
        for a in keys:
            col = {}
            for b in probes:
                prod = alg.mul_keys(a, b) if side == "left" else alg.mul_keys(b, a)
                for k, c in prod.terms.items():
                    col[(b, k)] = c
            cols.append(col)
        from .exact import nullspace_sparse

        null = nullspace_sparse(cols, alg.field)
        rep.checked += 1
        if null:
            w = Vec({k: c for k, c in zip(keys, null[0]) if c}, alg.field)
            rep.fail(f"{side} annihilator", {"side": side}, w, 0)
        else:
            rep.clause(f"{side} annihilator", True)
    return rep


def find_local_unit(alg: Algebra, targets, candidates=None):
    """Minimal e with e*t = t = t*e for every target, or None.

    Solves the linear system over ``candidates`` (default: the neighbourhood
    of the targets' supports); free coordinates are set to zero.
    """
    targets = [t for t in targets if t]
    if not targets:
        return Vec.zero(alg.field)
    support = sorted({k for t in targets for k in t.terms}, key=key_order)
    cand = list(candidates) if candidates is not None else alg.neighborhood(support)
    columns = []
    for e in cand:
        col = {}
        E = alg.key(e)
        for i, t in enumerate(targets):
            for k, c in alg.mul(E, t).terms.items():
                col[("L", i, k)] = c
            for k, c in alg.mul(t, E).terms.items():
                col[("R", i, k)] = c
        columns.append(col)
    rhs = {}
    for i, t in enumerate(targets):
        for k, c in t.terms.items():
            rhs[("L", i, k)] = c
            rhs[("R", i, k)] = c
    x = solve_sparse(columns, rhs, alg.field, order=key_order)
    if x is None:
        return None
    return Vec({k: c for k, c in zip(cand, x) if c}, alg.field)


def span_echelon(vectors, field):
    """Echelon basis of the span of Vecs (any leg count)."""
    ech = Echelon(field, key_order)
    for v in vectors:
        ech.add(v.coords())
    return ech


def reduce_to_basis(vectors, field, legs=1):
    ech = span_echelon(vectors, field)
    return [Vec(r, field, legs) for r in ech.basis()]


def vec_in_span(v: Vec, vectors) -> bool:
    return span_echelon(vectors, v.field).contains(v.coords())
