from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mhpartial.errors import UsageError
from mhpartial.exact import Echelon, Field, Mod, in_span, nullspace_sparse, rank, solve_linear, transpose


def test_field_validation():
    with pytest.raises(UsageError):
        Field.prime(4)
    with pytest.raises(UsageError):
        Field("rationals", 5)
    with pytest.raises(UsageError):
        Field("complex")


def test_scalar_parsing_and_format(Q, F7):
    assert Q("3/6") == Fraction(1, 2)
    assert Q.fmt(Q("-2/4")) == "-1/2"
    assert F7("3 mod 7") == Mod(3, 7)
    assert F7("1/2") == Mod(4, 7)
    assert F7.fmt(F7(-1)) == "6 mod 7"
    with pytest.raises(UsageError):
        F7("3 mod 5")
    with pytest.raises(UsageError):
        Q("1 mod 7")
    with pytest.raises(UsageError):
        Q("abc")


def test_mod_arithmetic():
    a = Mod(3, 7)
    assert a * a.inverse() == 1
    assert 1 / a == Mod(5, 7)
    assert a ** 3 == Mod(6, 7)
    assert -a == Mod(4, 7)
    with pytest.raises(ZeroDivisionError):
        Mod(0, 7).inverse()


def test_solve_linear_examples(Q, F7):
    assert solve_linear([[1, 0], [0, 1]], [3, 5]) == [3, 5]
    assert solve_linear([[1, 1], [2, 2]], [1, 3]) is None
    assert solve_linear([[F7(2)]], [F7(1)]) == [F7(4)]
    with pytest.raises(UsageError):
        solve_linear([[1, 2]], [1, 2])


def test_rank_examples():
    assert rank([[0] * 3] * 3) == 0
    assert rank([[int(i == j) for j in range(4)] for i in range(4)]) == 4


def test_in_span_examples(F7):
    assert in_span([0, 0], [])
    assert not in_span([1, 0], [[0, 1]])
    assert in_span([F7(1), F7(1)], [[F7(2), F7(2)]])
    with pytest.raises(UsageError):
        in_span([1, 0], [[1, 0, 0]])


def test_nullspace_basis(Q):
    cols = [{0: Q(1)}, {0: Q(2)}, {1: Q(1)}]
    null = nullspace_sparse(cols, Q)
    assert null == [[Q(-2), Q(1), Q(0)]]


def test_echelon_incremental(Q):
    e = Echelon(Q)
    assert e.add({0: Q(1), 1: Q(1)})
    assert not e.add({0: Q(2), 1: Q(2)})
    assert e.contains({0: Q(3), 1: Q(3)})
    assert not e.contains({1: Q(1)})
    assert e.dim == 1


small = st.integers(min_value=-4, max_value=4)
matrices = st.lists(st.lists(small, min_size=5, max_size=5), min_size=5, max_size=5)


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rank_equals_transpose_rank(A):
    assert rank(A) == rank(transpose(A))


@settings(max_examples=60, deadline=None)
@given(matrices, st.lists(small, min_size=5, max_size=5))
def test_solution_satisfies_system(A, b):
    x = solve_linear(A, b)
    if x is not None:
        assert [sum(Fraction(a) * xi for a, xi in zip(row, x)) for row in A] == b
    else:
        assert rank(A) < rank([row + [bi] for row, bi in zip(A, b)])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=4, max_size=4), max_size=4), st.lists(small, min_size=4, max_size=4))
def test_in_span_agrees_with_rank(S, v):
    cols_as_rows = [list(s) for s in S]
    assert in_span(v, S) == (rank(cols_as_rows) == rank(cols_as_rows + [v]))


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 6), st.integers(0, 6), st.integers(1, 6))
def test_prime_field_axioms(a, b, c):
    F = Field.prime(7)
    x, y, z = F(a), F(b), F(c)
    assert (x + y) * z == x * z + y * z
    assert (x * z) / z == x
