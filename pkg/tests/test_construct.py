import pytest

from mhpartial.algebra import Vec
from mhpartial.coaction import check_global_comodule, check_globality, check_partial_axioms, check_symmetric_axioms
from mhpartial.construct import (ProjectionSpec, build_h_coaction, build_induced_coaction, check_h_conditions,
                                 check_induction_hypotheses, check_projection, group_coaction)
from mhpartial.errors import UsageError
from mhpartial.families import (a_z, cyclic, epdq, function_algebra, group_algebra, indicator, periodic_indicator,
                                symmetric3)

E, T, C = (0, 1, 2), (1, 0, 2), (0, 2, 1)


@pytest.fixture(scope="module")
def s3(Q):
    G = symmetric3()
    return function_algebra(G, Q), group_algebra(G, Q)


@pytest.fixture(scope="module")
def rho(s3):
    AS, kS = s3
    return group_coaction(kS, AS)


@pytest.fixture(scope="module")
def pi(s3):
    return ProjectionSpec(s3[1], [E, T])


def test_group_coaction_is_global(rho):
    for check in (check_partial_axioms, check_symmetric_axioms, check_global_comodule, check_globality):
        assert check(rho).status == "pass"


def test_projection_multiplicative_only_on_image(pi):
    assert check_projection(pi, domain=pi.image_keys).status == "pass"
    rep = check_projection(pi)
    assert rep.status == "fail"
    w = rep.witnesses[0]
    assert w["clause"] == "multiplicative"
    assert w["inputs"] == [list(C), list(C)]
    assert (w["lhs"], w["rhs"]) == ([[list(E), "1"]], [])


def test_induced_coaction_is_partial_not_global(rho, pi):
    beta = build_induced_coaction(rho, pi)
    assert check_partial_axioms(beta).status == "pass"
    assert check_symmetric_axioms(beta).status == "pass"
    rep = check_global_comodule(beta)
    assert rep.status == "fail"
    assert rep.witnesses[0]["inputs"] == [list(E), list(E), list(C)]
    g = check_globality(beta)
    assert g.status == "fail"
    assert g.witnesses[0]["inputs"] == [list(E), list(C)]


def test_induction_hypotheses_domain(rho, pi, s3):
    t = s3[1].alg.key(T)
    assert check_induction_hypotheses(rho, pi, t, quantify_over="Y").status == "pass"
    rep = check_induction_hypotheses(rho, pi, t, quantify_over="Z")
    assert rep.status == "fail"
    assert rep.witnesses[0]["clause"] == "(i).multiplicative"


def test_induction_needs_unit_counit(rho, pi, s3):
    t = s3[1].alg.key(T).scale(2)
    assert check_induction_hypotheses(rho, pi, t).status == "precondition_failed"
    with pytest.raises(UsageError):
        check_induction_hypotheses(rho, pi, s3[1].alg.key(T), quantify_over="X")


def test_induced_needs_matching_projection(rho, Q):
    other = ProjectionSpec(group_algebra(symmetric3(), Q), [E, T])
    with pytest.raises(UsageError):
        build_induced_coaction(rho, other)


def test_subgroup_coaction(Q):
    G = cyclic(4)
    A, Y = function_algebra(G, Q), group_algebra(G, Q)
    cc = group_coaction(Y, A, subgroup=[0, 2])
    assert check_partial_axioms(cc).status == "pass"
    assert check_global_comodule(cc).status == "fail"


def test_h_conditions_on_rule_backends(Q):
    Z = a_z(Q)
    assert check_h_conditions(periodic_indicator(Z, 2), Z).status == "pass"
    assert check_h_conditions(periodic_indicator(Z, 1), Z).status == "pass"
    Ep = epdq(Q(2), Q)
    rep = check_h_conditions(Vec({(0, 0): 1}, Q), Ep)
    assert rep.status == "pass"
    assert rep.data["eps(h)"] == "1"


def test_h_conditions_fail_with_witness(AZ4):
    rep = check_h_conditions(indicator(AZ4, [0, 1]), AZ4)
    assert rep.status == "fail"
    assert rep.witnesses


def test_scaled_indicator_fails_counit(AZ4):
    rep = check_h_conditions(indicator(AZ4, [0, 2]).scale(2), AZ4)
    assert rep.clauses["(i) eps(h) = 1"] == "fail"
    assert rep.data["eps(h)"] == "2"


def test_rule_backend_coaction(Q, kZ2):
    Z = a_z(Q)
    cc = build_h_coaction(kZ2, Z, periodic_indicator(Z, 2))
    assert check_partial_axioms(cc).status == "pass"
    assert check_global_comodule(cc).status == "fail"
    one = build_h_coaction(kZ2, Z, periodic_indicator(Z, 1))
    assert check_global_comodule(one).status == "pass"
