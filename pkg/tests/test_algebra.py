import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mhpartial.algebra import (DenseAlgebra, RuleAlgebra, Vec, check_associativity, check_nondegenerate,
                               find_local_unit, flip, map_legs, tensor, vec_in_span)
from mhpartial.errors import UsageError
from mhpartial.families import a_z, cyclic, epdq, function_algebra, group_algebra, sweedler, symmetric3


def test_vec_arithmetic(Q):
    v = Vec({1: Q(1), 2: Q(0)}, Q)
    assert v.terms == {1: 1}
    w = Vec.basis(2, Q, coeff=3)
    assert (v + w - w) == v
    assert (2 * v).terms == {1: 2}
    assert not Vec.zero(Q)


def test_vec_field_mismatch(Q, F7):
    with pytest.raises(UsageError):
        Vec.basis(0, Q) + Vec.basis(0, F7)


def test_tensor_and_flip(Q):
    a = Vec({0: 1, 1: 2}, Q)
    b = Vec({5: 3}, Q)
    t = tensor(a, b)
    assert t.legs == 2
    assert t.terms == {(0, 5): 3, (1, 5): 6}
    assert flip(t).terms == {(5, 0): 3, (5, 1): 6}
    doubled = map_legs(t, 1, 1, lambda k: Vec({k: 2}, Q), 1)
    assert doubled == t.scale(2)


def test_function_algebra_products(AZ4):
    A = AZ4.alg
    assert A.mul_keys(1, 1) == A.key(1)
    assert not A.mul_keys(1, 2)
    assert A.unit() == Vec({g: 1 for g in range(4)}, A.field)


def test_group_algebra_products(Q):
    kS3 = group_algebra(symmetric3(), Q).alg
    t = (1, 0, 2)
    assert kS3.mul_keys(t, t) == kS3.key((0, 1, 2))
    assert kS3.unit() == kS3.key((0, 1, 2))


def test_sweedler_relations(Q):
    H = sweedler(Q).alg
    g, x = H.key((1, 0)), H.key((0, 1))
    assert H.mul(g, g) == H.unit()
    assert not H.mul(x, x)
    assert H.mul(g, x) == -H.mul(x, g)


@pytest.mark.parametrize("make", [
    lambda Q: function_algebra(cyclic(4), Q).alg,
    lambda Q: group_algebra(symmetric3(), Q).alg,
    lambda Q: sweedler(Q).alg,
    lambda Q: a_z(Q).alg,
    lambda Q: epdq(Q(2), Q).alg,
])
def test_associative_and_nondegenerate(Q, make):
    A = make(Q)
    assert check_associativity(A).status == "pass"
    assert check_nondegenerate(A).status == "pass"


def test_epdq_corruption_breaks_associativity(Q):
    good = epdq(Q(2), Q).alg
    bad = RuleAlgebra(Q, lambda a, b: {(a[0], a[1] + b[1]): 1} if a[0] == b[0] + b[1] else {},
                      good.window(), valid=good.valid)
    rep = check_associativity(bad)
    assert rep.status == "fail"
    w = rep.witnesses[0]
    assert w["inputs"] == [[-2, 0], [-3, 1], [-3, 0]]
    assert w["lhs"] == []
    assert w["rhs"] == [[[-2, 1], "1"]]


def test_degenerate_algebra_detected(Q):
    # span{u, n}: u is a unit for itself, n annihilates everything
    A = DenseAlgebra(["n", "u"], Q, table={("u", "u"): {"u": 1}})
    rep = check_nondegenerate(A)
    assert rep.status == "fail"
    assert rep.witnesses[0]["lhs"] == [["n", "1"]]


def test_local_units(Q, AZ4):
    A = AZ4.alg
    assert find_local_unit(A, [A.key(1), A.key(3)]) == A.key(1) + A.key(3)
    E = epdq(Q(2), Q).alg
    e = find_local_unit(E, [E.key((0, 1)), E.key((2, 0))])
    assert e == E.key((-1, 0)) + E.key((0, 0)) + E.key((2, 0))
    for t in (E.key((0, 1)), E.key((2, 0))):
        assert E.mul(e, t) == t == E.mul(t, e)


def test_local_unit_absent(Q):
    A = DenseAlgebra(["n"], Q, table={})
    assert find_local_unit(A, [A.key("n")]) is None


def test_valid_keys(Q):
    A = a_z(Q, radius=2).alg
    assert A.valid(0)
    kS3 = group_algebra(symmetric3(), Q).alg
    assert kS3.valid((0, 1, 2)) and not kS3.valid((0, 0, 0))
    with pytest.raises(UsageError):
        kS3.mul_keys((0, 0, 0), (0, 1, 2))


coeffs = st.integers(-3, 3)


@settings(max_examples=40, deadline=None)
@given(st.lists(coeffs, min_size=4, max_size=4), st.lists(coeffs, min_size=4, max_size=4),
       st.lists(coeffs, min_size=4, max_size=4))
def test_sweedler_associative_on_random_elements(a, b, c):
    from mhpartial.exact import Field
    Q = Field.rationals()
    H = sweedler(Q).alg
    mk = lambda cs: Vec(dict(zip(H.basis, cs)), Q)  # noqa: E731
    x, y, z = mk(a), mk(b), mk(c)
    assert H.mul(H.mul(x, y), z) == H.mul(x, H.mul(y, z))
    assert H.mul(x, y + z) == H.mul(x, y) + H.mul(x, z)


@settings(max_examples=40, deadline=None)
@given(st.lists(coeffs, min_size=2, max_size=2))
def test_span_membership_of_combinations(cs):
    from mhpartial.exact import Field
    Q = Field.rationals()
    vs = [Vec({0: 1, 1: 1}, Q), Vec({1: 1, 2: 1}, Q)]
    combo = vs[0].scale(cs[0]) + vs[1].scale(cs[1])
    assert vec_in_span(combo, vs)
    assert not vec_in_span(combo + Vec({0: 1, 2: 1}, Q), vs)
