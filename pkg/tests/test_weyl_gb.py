from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import coords, weyl_apply, weyl_elements
from weylfc.cpoly import CPoly
from weylfc.errors import (
    InvalidOrder,
    NegativeWeightSum,
    NonHomogeneousInput,
    ParameterLeadingCoefficient,
)
from weylfc.scalars import ParamScalar
from weylfc.weyl import WeylContext, WeylElement, homogenize
from weylfc.weyl_gb import (
    WeylOrder,
    check_standard_rep,
    initial_form,
    is_weyl_groebner,
    leading_monomial,
    principal_symbol,
    weyl_buchberger,
    weyl_normal_form,
    weyl_spair,
)

D1 = WeylContext(1)
D2 = WeylContext(2)
H2 = WeylContext(2, homogenized=True)


def x(i, ctx=D2):
    return WeylElement.x(ctx, i)


def d(i, ctx=D2):
    return WeylElement.d(ctx, i)


def test_order_keys():
    w = WeylOrder.w(2)
    # d-degree decides first
    assert w.key((0, 0, 1, 0, 0)) > w.key((5, 5, 0, 0, 0))
    km = WeylOrder.km(2)
    # weight -1 on x: x1 d1 < d1
    assert km.key((0, 0, 1, 0, 2)) > km.key((1, 0, 1, 0, 0))
    # tie-break d1 > d2 > x1 > x2
    assert km.key((0, 0, 1, 0, 0)) > km.key((0, 0, 0, 1, 0))
    assert km.key((1, 0, 1, 1, 0)) > km.key((0, 1, 1, 1, 0))
    with pytest.raises(InvalidOrder):
        WeylOrder.by_name("grevlex", 2)


def test_initial_forms():
    p = x(1) * d(1) ** 2 + d(1) + x(1) ** 3
    assert str(principal_symbol(p)) == "x1*xi1^2"
    assert initial_form(p, (0, 0), (1, 1)).order_value == 2
    v = initial_form(p, (-1, 0), (1, 0))
    assert isinstance(v.form, WeylElement)
    assert v.form == x(1) * d(1) ** 2 + d(1)
    with pytest.raises(NegativeWeightSum):
        initial_form(p, (-2, 0), (1, 0))
    with pytest.raises(NotImplementedError):
        initial_form(p, (0, -1), (1, 1))


def test_spair_cancels_leading_terms():
    order = WeylOrder.w(2)
    f = x(1) * d(1) - 1
    g = d(1) * d(2)
    s = weyl_spair(f, g, order)
    lcm = (1, 0, 1, 1, 0)
    assert lcm not in s.terms


def test_normal_form_identity():
    order = WeylOrder.w(2)
    G = [d(1) - x(1), x(2) * d(2) - 2]
    f = d(1) ** 2 * x(2) + x(2) ** 2 * d(2)
    r, q = weyl_normal_form(f, G, order)
    assert q[0] * G[0] + q[1] * G[1] + r == f
    for e in r.terms:
        assert not any(all(a <= b for a, b in zip(leading_monomial(g, order)[0], e)) for g in G)


def test_parameter_leading_coefficient_is_rejected():
    order = WeylOrder.w(2)
    a = ParamScalar.symbol("a")
    with pytest.raises(ParameterLeadingCoefficient):
        weyl_normal_form(d(1), [d(1).scale(a)], order)


def test_km_needs_homogenized_algebra():
    with pytest.raises(InvalidOrder):
        weyl_buchberger([d(1)], WeylOrder.km(2))
    with pytest.raises(NonHomogeneousInput):
        weyl_buchberger([d(1, H2) + x(1, H2) * 0 + WeylElement.const(H2, 1)], WeylOrder.km(2))


# Generators annihilating F = exp(x1^2) * x2^(3/2); every element of the
# left ideal they generate must annihilate F as well.
F_EXPR = sp.exp(sp.Symbol("x1") ** 2) * sp.Symbol("x2") ** sp.Rational(3, 2)
ANN = [d(1) - x(1) * 2, x(2) * d(2) - Fraction(3, 2)]


COFACTORS = [
    (x(2), d(1)),
    (d(2) + 1, x(1) * x(2)),
    (x(1), d(2) - x(2)),
    (d(1) + d(2), WeylElement.const(D2, 3)),
]


@pytest.mark.parametrize("c1,c2", COFACTORS)
def test_buchberger_stays_in_annihilator(c1, c2):
    gens = [c1 * ANN[0] + c2 * ANN[1], ANN[0] * 1 + c1 * ANN[1]]
    order = WeylOrder.w(2)
    gb = weyl_buchberger(gens, order)
    assert is_weyl_groebner(gb, order)[0]
    for g in gb:
        assert sp.simplify(weyl_apply(g, F_EXPR)) == 0


def test_buchberger_completes_non_basis():
    order = WeylOrder.w(1)
    xx, dd = WeylElement.x(D1, 1), WeylElement.d(D1, 1)
    gens = [xx * dd, dd ** 2]
    assert not is_weyl_groebner(gens, order)[0]
    gb = weyl_buchberger(gens, order)
    assert is_weyl_groebner(gb, order)[0]
    # d^2 * x = x d^2 + 2 d, so d lies in the ideal
    assert weyl_normal_form(dd, gb, order)[0].is_zero()


def test_homogenized_buchberger():
    order = WeylOrder.km(2)
    gens = [homogenize(x(1) * d(1) - x(2) * d(2)), homogenize(d(1) * d(2) - x(1))]
    gb = weyl_buchberger(gens, order)
    assert is_weyl_groebner(gb, order)[0]
    assert all(g.is_homogeneous() for g in gb)


def test_standard_rep_certificate():
    order = WeylOrder.w(2)
    g1, g2 = d(1) - x(1), x(2) * d(2)
    f = x(2) * g1 + g2
    ok = check_standard_rep(f, [(x(2), g1), (WeylElement.const(D2, 1), g2)], order)
    assert ok and ok.identity
    bad = check_standard_rep(f - g2, [(x(2), g1), (d(2), g2), (-d(2), g2)], order)
    assert bad.identity and not bad.ok and bad.failing_index == 1
    wrong = check_standard_rep(f, [(x(2), g1)], order)
    assert not wrong.identity and wrong.difference == g2
