import pytest

from mhpartial.algebra import tensor
from mhpartial.families import a_z, cyclic, epdq, function_algebra, group_algebra, sweedler, symmetric3, taft
from mhpartial.mhopf import (check_antipode, check_bialgebra_structure, check_coassociativity, check_counit,
                             check_hopf, check_regular, dense_mha)

FAMILIES = {
    "A_Z4": lambda Q, F7: function_algebra(cyclic(4), Q),
    "kS3": lambda Q, F7: group_algebra(symmetric3(), Q),
    "sweedler": lambda Q, F7: sweedler(Q),
    "taft3": lambda Q, F7: taft(3, F7(2), F7),
    "A_Z": lambda Q, F7: a_z(Q),
    "epdq": lambda Q, F7: epdq(Q(2), Q),
}


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_hopf_axioms_hold(Q, F7, name):
    rep = check_hopf(FAMILIES[name](Q, F7))
    assert rep.status == "pass", rep.to_text()
    assert rep.checked > 0


@pytest.mark.parametrize("name,rank", [("A_Z4", 16), ("kS3", 36), ("sweedler", 16), ("taft3", 81)])
def test_regular_dense_ranks(Q, F7, name, rank):
    rep = check_regular(FAMILIES[name](Q, F7))
    assert rep.status == "pass"
    assert rep.data["rank T1'"] == rep.data["dim T1'"] == rank


def test_sweedler_structure(Q):
    H = sweedler(Q)
    A = H.alg
    one, g, x = A.key((0, 0)), A.key((1, 0)), A.key((0, 1))
    assert H.classical((0, 1)) == tensor(x, one) + tensor(g, x)
    assert H.S((0, 1)).left(A.unit()) == A.mul(g, x).scale(-1)
    assert (H.counit((1, 0)), H.counit((0, 1))) == (1, 0)


def test_taft_label(F7):
    assert taft(3, F7(2), F7).name == "T3(2)"



def test_wrong_antipode_detected(Q):
    H = sweedler(Q)
    bad = dense_mha(H.alg, H.classical, H.counit, lambda a: H.alg.key(a))
    rep = check_antipode(bad)
    assert rep.status == "fail"
    assert rep.witnesses


def test_wrong_counit_detected(Q):
    H = sweedler(Q)
    good_S = lambda a: H.S(a).left(H.alg.unit())  # noqa: E731
    bad = dense_mha(H.alg, H.classical, lambda a: 1, good_S)
    assert check_counit(bad).status == "fail"
    assert check_hopf(dense_mha(H.alg, H.classical, H.counit, good_S)).status == "pass"


def test_non_coassociative_coproduct_detected(Q):
    H = sweedler(Q)
    A = H.alg
    one, g, x = A.key((0, 0)), A.key((1, 0)), A.key((0, 1))

    def delta(a):
        if a == (0, 1):
            return tensor(x, one) + tensor(g, x) + tensor(x, x)
        return H.classical(a)

    bad = dense_mha(A, delta, H.counit, lambda a: A.key(a))
    assert check_coassociativity(bad).status == "fail"
    assert check_bialgebra_structure(bad).status == "fail"
