import pytest
import sympy as sp

from conftest import generic_function, weyl_apply
from weylfc.lauricella.identities import (
    check_spair_case,
    division_certificate,
    spair_cases,
    spair_negative_control,
    syzygy_suite,
    verify_commutation,
    verify_spair_suite,
    verify_syzygy_displays,
    y_standard_rep,
)
from weylfc.lauricella.operators import ParamSet, ell, ell_ij, ell_prime, y_context
from weylfc.weyl import theta_total


def _sympy_commutator_check(m, i, j, rhs_kind):
    """Oracle: compare both sides acting on a generic function of y."""
    P = ParamSet.symbolic(m)
    ctx = y_context(m)
    G = generic_function(ctx)
    li, lj = ell_prime(P, i), ell_prime(P, j)
    lhs = weyl_apply(li, weyl_apply(lj, G)) - weyl_apply(lj, weyl_apply(li, G))
    X = theta_total(ctx) * 2 - P.a - P.b + 1
    diff_op = li - lj
    if rhs_kind == "stated":
        rhs = -weyl_apply(X, weyl_apply(diff_op, G))
    else:
        rhs = weyl_apply(diff_op, weyl_apply(X, G))
    return sp.expand(lhs - rhs) == 0


def test_commutation_stated_form_is_false_by_oracle():
    assert not _sympy_commutator_check(2, 1, 2, "stated")
    assert _sympy_commutator_check(2, 1, 2, "corrected")


@pytest.mark.parametrize("m", [2, 3])
def test_commutation_forms(m):
    stated = verify_commutation(m, 1, 2)
    assert not stated.passed and stated.detail["first_difference"]
    assert verify_commutation(m, 1, m, form="corrected").passed
    assert not verify_commutation(m, 1, 2, form="corrected", drop_one=True).passed
    with pytest.raises(ValueError):
        verify_commutation(m, 1, 1)


def test_y_standard_rep_shift():
    P = ParamSet.symbolic(2)
    stated = y_standard_rep(P, 1, 2, 1)
    assert not stated.passed and not stated.detail["identity"]
    fixed = y_standard_rep(P, 1, 2, -1)
    assert fixed.passed and fixed.detail["in_f"] == "y1^5*d1^4"


def test_spair_case_layout():
    P = ParamSet.symbolic(4)
    cases = spair_cases(P)
    # pairs among 4 + 6 generators
    assert len(cases) == 45
    kinds = {c.kind for c in cases}
    assert kinds == {
        "(T_i,T_j)", "(T_i,T_ij)", "(T_j,T_ij)", "(T_k,T_ij)",
        "(T_ij,T_ik)", "(T_ij,T_kj)", "(T_ij,T_jk)", "(T_ij,T_i'j')",
    }


def _by_kind(checks):
    out = {}
    for c in checks:
        kind = c.name.split(")(")[0] + ")"
        out.setdefault(kind, []).append(c)
    return out


def test_spair_suite_m3_outcomes():
    groups = _by_kind(verify_spair_suite(3))
    for kind in ("sp(T_i,T_j)", "sp(T_i,T_ij)", "sp(T_ij,T_ik)", "sp(T_ij,T_kj)", "sp(T_ij,T_jk)"):
        assert all(c.passed for c in groups[kind]), kind
    # stated right side misses a T_ij term
    assert all(not c.detail["identity"] for c in groups["sp(T_j,T_ij)"])
    # exact but not standard: leading terms cancel above in(sp)
    tk = groups["sp(T_k,T_ij)"]
    assert all(c.detail["identity"] for c in tk) and not all(c.passed for c in tk)
    # every S-pair still divides to zero with a certified representation
    assert all(c.detail["division_certificate"] for cs in groups.values() for c in cs)


def test_completed_variant_is_exact():
    for c in verify_spair_suite(3, completed=True):
        assert c.detail["identity"], c.name


def test_spair_definition_flag():
    P = ParamSet.symbolic(2)
    first = check_spair_case(P, spair_cases(P)[0])
    assert first.passed and first.detail["matches_spair_definition"] is False
    other = check_spair_case(P, spair_cases(P)[1])
    assert other.detail["matches_spair_definition"] is True


def test_negative_control():
    c = spair_negative_control(3)
    assert not c.passed and c.detail["first_difference"]


def test_syzygies():
    for m in (2, 3):
        assert all(c.passed for c in verify_syzygy_displays(m))
        assert not all(c.passed for c in verify_syzygy_displays(m, flip_last=True))
    assert all(c.passed for c in syzygy_suite(3, completed=True))


def test_theta_syzygy_by_oracle():
    """Oracle: the theta display acting on a generic function, m = 2."""
    from weylfc.lauricella.operators import x_context
    from weylfc.weyl import WeylElement

    P = ParamSet.symbolic(2)
    ctx = x_context(2)
    F = generic_function(ctx)
    th = theta_total(ctx)
    t1, t2 = WeylElement.theta(ctx, 1), WeylElement.theta(ctx, 2)
    q1 = t1 * (t1 - 1) + t1 * P.c[0]
    q2 = t2 * (t2 - 1) + t2 * P.c[1]
    l1, l2, l12 = ell(P, 1), ell(P, 2), ell_ij(P, 1, 2)
    total = (
        weyl_apply(q2, weyl_apply(l1, F))
        - weyl_apply(q1, weyl_apply(l2, F))
        - weyl_apply((th + P.a - 1) * (th + P.b - 1), weyl_apply(l12, F))
    )
    assert sp.expand(total) == 0


def test_division_certificate_rejects_non_members():
    P = ParamSet.symbolic(2)
    from weylfc.weyl import WeylElement
    from weylfc.lauricella.operators import h_context
    from weylfc.weyl_gb import WeylOrder

    assert not division_certificate(P, WeylElement.d(h_context(2), 1), WeylOrder.km(2))
