"""Exact scalars over Q and F_p, and the small linear-algebra kernel.

Rationals are ``fractions.Fraction``; prime-field scalars are :class:`Mod`.
Matrices are lists of rows.  Elimination works on sparse dict rows so the
same code serves integer-indexed matrices and vectors keyed by basis keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import UsageError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class Mod:
    """Residue class modulo a prime, canonical representative 0..p-1."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _other(self, o):
        if isinstance(o, Mod):
            if o.p != self.p:
                raise UsageError(f"mixed prime fields F_{self.p} and F_{o.p}")
            return o.v
        if isinstance(o, int):
            return o
        if isinstance(o, Fraction):
            return o.numerator * pow(o.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, o):
        o = self._other(o)
        return NotImplemented if o is NotImplemented else Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._other(o)
        return NotImplemented if o is NotImplemented else Mod(self.v - o, self.p)

    def __rsub__(self, o):
        o = self._other(o)
        return NotImplemented if o is NotImplemented else Mod(o - self.v, self.p)

    def __mul__(self, o):
        o = self._other(o)
        return NotImplemented if o is NotImplemented else Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.v, self.p)

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError("0 has no inverse")
        return Mod(pow(self.v, self.p - 2, self.p), self.p)

    def __truediv__(self, o):
        o = self._other(o)
        if o is NotImplemented:
            return o
        return self * Mod(o, self.p).inverse()

    def __rtruediv__(self, o):
        return Mod(o, self.p) / self

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return Mod(pow(self.v, e, self.p), self.p)

    def __eq__(self, o):
        o = self._other(o)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v} mod {self.p}"


@dataclass(frozen=True)
class Field:
    """``Field("rationals")`` or ``Field("prime", p)``."""

    kind: str = "rationals"
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rationals":
            if self.p is not None:
                raise UsageError("the rational field takes no modulus")
        elif self.kind == "prime":
            if self.p is None or not is_prime(self.p):
                raise UsageError(f"p={self.p} is not prime")
        else:
            raise UsageError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls):
        return cls("rationals")

    @classmethod
    def prime(cls, p):
        return cls("prime", p)

    @property
    def characteristic(self):
        return 0 if self.kind == "rationals" else self.p

    def __call__(self, x):
        """Coerce an int, Fraction, Mod or scalar string into the field."""
        if isinstance(x, str):
            return self.parse(x)
        if self.kind == "rationals":
            if isinstance(x, Mod):
                raise UsageError("prime-field scalar given to a rational field")
            return Fraction(x)
        if isinstance(x, Mod):
            if x.p != self.p:
                raise UsageError(f"scalar mod {x.p} given to F_{self.p}")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} undefined in F_{self.p}")
            return Mod(x.numerator, self.p) / x.denominator
        if isinstance(x, int):
            return Mod(x, self.p)
        raise UsageError(f"cannot coerce {x!r} into {self}")

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def parse(self, s: str):
        s = s.strip()
        if " mod " in s:
            n, p = s.split(" mod ")
            if self.kind != "prime" or int(p) != self.p:
                raise UsageError(f"scalar {s!r} does not belong to {self}")
            return Mod(int(n), self.p)
        try:
            return self(Fraction(s))
        except ValueError as exc:
            raise UsageError(f"bad scalar string {s!r}") from exc

    def fmt(self, x) -> str:
        if self.kind == "prime":
            return f"{x.v} mod {self.p}"
        return str(x)

    def describe(self):
        return {"kind": self.kind} if self.p is None else {"kind": self.kind, "p": self.p}

    def __str__(self):
        return "Q" if self.kind == "rationals" else f"F_{self.p}"


# -- elimination on sparse rows ---------------------------------------------


def _clean(row):
    return {k: v for k, v in row.items() if v}


class Echelon:
    """Incremental reduced row echelon basis of a span of sparse vectors.

    Vectors are dicts ``column -> scalar``.  ``order`` ranks columns; the pivot
    of each stored row is its smallest column under ``order``.
    """

    def __init__(self, field: Field, order=None):
        self.field = field
        self.order = order or (lambda c: c)
        self.rows = {}  # pivot column -> row with 1 at pivot

    def reduce(self, v):
        r = _clean(v)
        for piv, row in self.rows.items():
            c = r.get(piv)
            if c:
                for k, x in row.items():
                    r[k] = r.get(k, 0) - c * x
                r = _clean(r)
        return r

    def add(self, v) -> bool:
        """Insert ``v``; return True when it enlarged the span."""
        r = self.reduce(v)
        if not r:
            return False
        piv = min(r, key=self.order)
        inv = self.field.one / r[piv]
        r = {k: x * inv for k, x in r.items()}
        for p2, row in self.rows.items():
            c = row.get(piv)
            if c:
                for k, x in r.items():
                    row[k] = row.get(k, 0) - c * x
                self.rows[p2] = _clean(row)
        self.rows[piv] = r
        return True

    def contains(self, v) -> bool:
        return not self.reduce(v)

    @property
    def dim(self):
        return len(self.rows)

    def basis(self):
        return [self.rows[p] for p in sorted(self.rows, key=self.order)]


def _as_sparse(rows):
    return [{j: x for j, x in enumerate(r) if x} for r in rows]


def _field_of(rows, field):
    if field is not None:
        return field
    for r in rows:
        for x in r:
            if isinstance(x, Mod):
                return Field.prime(x.p)
    return Field.rationals()


def rank(A, field: Field | None = None) -> int:
    """Row rank of the list-of-rows matrix ``A``."""
    field = _field_of(A, field)
    ech = Echelon(field)
    for r in _as_sparse(A):
        ech.add(r)
    return ech.dim


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def solve_sparse(columns, b, field: Field, order=None):
    """Solve ``sum_i x_i columns[i] = b`` for sparse dict vectors.

    Returns the list ``x`` with free variables set to zero, or None when the
    system is inconsistent.  Pivoting: leftmost unknown first.
    """
    # rows of the augmented system indexed by coordinate keys
    n = len(columns)
    rows = {}
    for i, col in enumerate(columns):
        for k, v in col.items():
            if v:
                rows.setdefault(k, {})[i] = v
    for k, v in b.items():
        if v:
            rows.setdefault(k, {})["rhs"] = v
    keys = sorted(rows, key=order) if order else list(rows)
    col_order = lambda c: n if c == "rhs" else c  # noqa: E731
    ech = Echelon(field, col_order)
    for k in keys:
        ech.add(rows[k])
    if "rhs" in ech.rows:
        return None
    x = [field.zero] * n
    for piv, row in ech.rows.items():
        x[piv] = field(row.get("rhs", 0))
    return x


def solve_linear(A, b, field: Field | None = None):
    """First solution of ``A x = b`` (free variables zero) or None."""
    if len(A) != len(b):
        raise UsageError(f"matrix has {len(A)} rows but rhs has length {len(b)}")
    field = _field_of(A + [b], field)
    ncols = len(A[0]) if A else 0
    columns = [{i: A[i][j] for i in range(len(A)) if A[i][j]} for j in range(ncols)]
    return solve_sparse(columns, {i: x for i, x in enumerate(b) if x}, field)


def in_span(v, S, field: Field | None = None) -> bool:
    """True iff column ``v`` lies in the span of the columns ``S``."""
    for s in S:
        if len(s) != len(v):
            raise UsageError("vectors of different lengths")
    field = _field_of([list(v)] + [list(s) for s in S], field)
    ech = Echelon(field)
    for s in S:
        ech.add(dict(enumerate(s)))
    return ech.contains(dict(enumerate(v)))


def nullspace_sparse(columns, field: Field):
    """Basis of ``{x : sum_i x_i columns[i] = 0}`` as dense coefficient lists."""
    n = len(columns)
    rows = {}
    for i, col in enumerate(columns):
        for k, v in col.items():
            if v:
                rows.setdefault(k, {})[i] = v
    ech = Echelon(field)
    for r in rows.values():
        ech.add(r)
    pivots = set(ech.rows)
    basis = []
    for f in range(n):
        if f in pivots:
            continue
        x = [field.zero] * n
        x[f] = field.one
        for piv, row in ech.rows.items():
            c = row.get(f)
            if c:
                x[piv] = -c
        basis.append(x)
    return basis


def matvec(A, x):
    return [sum((a * b for a, b in zip(row, x)), 0) for row in A]
