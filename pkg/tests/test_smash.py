import pytest

from mhpartial.algebra import Vec
from mhpartial.construct import build_h_coaction
from mhpartial.errors import UsageError
from mhpartial.families import sweedler
from mhpartial.smash import (build_Cb, build_smash, cb_structure, check_Cb, check_coassoc_bar,
                             check_compatibility_bar, check_hom_bar, check_iso_YhA, check_left_counit,
                             check_restriction_AN, check_right_counit, check_smash_T_bijective, check_T_tilde,
                             eps_bar_checks)


@pytest.fixture(scope="module")
def ss02(h02):
    return build_smash(h02)


@pytest.fixture(scope="module")
def ss1(h_one):
    return build_smash(h_one)


def expected_delta(Q, N, y=1):
    """Dbar(y (x) delta_0) = sum over g in N of (y (x) delta_g) (x) (y (x) delta_-g)."""
    return Vec({(y, g, y, (-g) % 4): Q(1) for g in N}, Q, 4)


@pytest.mark.parametrize("check", [check_compatibility_bar, check_coassoc_bar, check_hom_bar, check_left_counit,
                                   check_T_tilde])
def test_smash_axioms_hold(ss02, ss1, check):
    assert check(ss02).status == "pass"
    assert check(ss1).status == "pass"


def test_delta_element(Q, ss02, ss1):
    assert ss02.delta_element((1, 0)) == expected_delta(Q, [0, 2])
    assert ss1.delta_element((1, 0)) == expected_delta(Q, range(4))


def test_right_counit_fails_for_proper_subgroup(ss02, ss1):
    rep = check_right_counit(ss02)
    assert rep.status == "fail"
    w = rep.witnesses[0]
    assert w["inputs"] == [[0, 1], [0, 1]]
    assert (w["lhs"], w["rhs"]) == ([], [[[0, 1], "1"]])
    assert check_right_counit(ss1).status == "pass"
    assert eps_bar_checks(ss02, expect_right_fail=True).status == "pass"
    assert eps_bar_checks(ss02, expect_right_fail=True).data["right counit"] == "expected_fail_confirmed"


def test_T_ranks(ss02, ss1):
    rep = check_smash_T_bijective(ss02)
    assert rep.status == "fail"
    assert (rep.data["rank T1"], rep.data["rank T2"], rep.data["dim T1"]) == (32, 32, 64)
    rep = check_smash_T_bijective(ss1)
    assert rep.status == "pass"
    assert rep.data["rank T1"] == 64


def test_Cb_is_Y_tensor_hA(Q, ss02, ss1):
    cb = build_Cb(ss02)
    assert cb.dim == 4
    assert cb.basis == [Vec.basis(k, Q) for k in [(0, 0), (0, 2), (1, 0), (1, 2)]]
    assert check_Cb(cb).status == "pass"
    assert check_iso_YhA(ss02, cb).status == "pass"
    assert check_restriction_AN(ss02, [0, 2]).status == "pass"
    cb1 = build_Cb(ss1)
    assert cb1.dim == 8
    assert check_iso_YhA(ss1, cb1).status == "pass"


def test_Cb_structure_constants(Q, ss02):
    product, coproduct, counit, unit = cb_structure(build_Cb(ss02))
    assert counit == {0: 1, 1: 0, 2: 1, 3: 0}
    assert unit == [1, 1, 0, 0]
    assert product[(2, 2)] == {0: 1}
    assert coproduct[2] == {(2, 2): 1, (3, 3): 1}


def test_Cb_rejects_bad_b(Q, ss02):
    with pytest.raises(UsageError):
        build_Cb(ss02, Vec.basis((0, 1), Q))


def test_hom_needs_commutative_A(Q, kZ2):
    H = sweedler(Q)
    cc = build_h_coaction(kZ2, H, H.alg.unit())
    rep = check_hom_bar(build_smash(cc))
    assert rep.status == "precondition_failed"


def test_hom_local_unit_recorded(ss02):
    rep = check_hom_bar(ss02)
    assert str(rep.data["local unit of the window"]) == "[(0, 0)] + [(0, 1)] + [(0, 2)] + [(0, 3)]"
