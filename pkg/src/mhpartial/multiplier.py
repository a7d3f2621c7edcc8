"""Multipliers as pairs of linear maps ``(left, right)``.

``X.left(b)`` is ``X*b`` and ``X.right(a)`` is ``a*X``.  Nothing infinite is
ever materialised: a multiplier is only its two actions.
"""

from __future__ import annotations

import itertools

from .algebra import Algebra, Vec, find_local_unit, key_order, map_legs
from .errors import InternalInconsistency, UsageError, WindowExhausted


class Multiplier:
    """Compatible pair of actions on an algebra ``alg``.

    ``delta`` optionally holds the actions of the extended comultiplication
    ``Delta(X)`` on two-leg tensors, as a ``(left, right)`` pair, when the
    multiplier is not an element and no dense decomposition is available.
    """

    def __init__(self, left, right, alg: Algebra, name="", delta=None, counit=None):
        self.left = left
        self.right = right
        self.alg = alg
        self.name = name
        self.delta = delta
        self.counit_value = counit
        self.element = None

    def __repr__(self):
        return f"Multiplier({self.name or '?'})"

    def __mul__(self, other):
        return mul(self, other)


def embed(x: Vec, alg: Algebra, name="") -> Multiplier:
    """The multiplier of left/right multiplication by ``x``."""
    m = Multiplier(lambda b: alg.mul(x, b), lambda a: alg.mul(a, x), alg, name or repr(x))
    m.element = x
    return m


def identity(alg: Algebra) -> Multiplier:
    m = Multiplier(lambda b: b, lambda a: a, alg, "1")
    m.counit_value = alg.field.one
    m.delta = (lambda t: t, lambda t: t)
    return m


def as_multiplier(x, alg):
    return x if isinstance(x, Multiplier) else embed(x, alg)


def mul(X: Multiplier, Y: Multiplier) -> Multiplier:
    """``XY = (X.left o Y.left, Y.right o X.right)``."""
    if X.alg is not Y.alg:
        raise UsageError("multipliers on different algebras")
    m = Multiplier(lambda b: X.left(Y.left(b)), lambda a: Y.right(X.right(a)), X.alg, f"{X.name}*{Y.name}")
    if X.element is not None and Y.element is not None:
        m.element = X.alg.mul(X.element, Y.element)
    if X.delta is not None and Y.delta is not None:
        m.delta = (lambda t: X.delta[0](Y.delta[0](t)), lambda t: Y.delta[1](X.delta[1](t)))
    if X.counit_value is not None and Y.counit_value is not None:
        m.counit_value = X.counit_value * Y.counit_value
    return m


def compatibility_witness(X: Multiplier, keys):
    """First pair ``(a, b)`` with ``a(Xb) != (aX)b``, else None."""
    alg = X.alg
    for a, b in itertools.product(keys, repeat=2):
        A, B = alg.key(a), alg.key(b)
        if alg.mul(A, X.left(B)) != alg.mul(X.right(A), B):
            return (a, b)
    return None


def check_compatible(X: Multiplier, keys):
    w = compatibility_witness(X, keys)
    if w is not None:
        raise InternalInconsistency(f"multiplier {X.name} is not compatible", w)
    return X


def equal_on(X: Multiplier, Y: Multiplier, keys) -> bool:
    alg = X.alg
    return all(X.left(alg.key(k)) == Y.left(alg.key(k)) and X.right(alg.key(k)) == Y.right(alg.key(k))
               for k in keys)


def realize(X: Multiplier, window=None):
    """Element ``x`` with ``embed(x) == X`` on the window, or None.

    A local unit ``e`` for the window gives the candidate ``x = X e``; it is
    then tested on both sides over the window, its neighbourhood and one
    further ring of keys, which is what exposes infinite-support multipliers.
    """
    alg = X.alg
    if X.element is not None:
        return X.element
    keys = list(window) if window is not None else alg.window()
    if alg.dense:
        e = alg.unit()
    else:
        e = find_local_unit(alg, [alg.key(k) for k in keys])
    if e is None:
        raise WindowExhausted("no local unit for the window", keys)
    x = X.left(e)
    probe = set(alg.neighborhood(keys))
    if not alg.dense:
        probe |= set(alg.neighborhood(list(probe)))
        expand = getattr(alg, "expand", None)
        if expand is not None:
            probe |= set(expand(keys))
    for k in sorted(probe, key=key_order):
        b = alg.key(k)
        if X.left(b) != alg.mul(x, b) or X.right(b) != alg.mul(b, x):
            return None
    return x


def completion_action(X: Multiplier, t: Vec, leg: int, side="left"):
    """Apply ``X`` through leg ``leg`` of tensor ``t`` only."""
    if leg < 0 or leg >= t.legs:
        raise UsageError(f"leg {leg} out of range for a {t.legs}-leg tensor")
    act = X.left if side == "left" else X.right
    alg = X.alg
    return map_legs(t, leg, 1, lambda k: act(alg.key(k)), 1)
