from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import weyl_apply
from weylfc.errors import UnspecializedParameter
from weylfc.lauricella.operators import ParamSet, ell
from weylfc.lauricella.puiseux import (
    PuiseuxFn,
    apply_to_puiseux,
    check_example_solutions,
    example_functions,
    example_params,
)

X = sp.symbols("x1 x2")
H = Fraction(1, 2)


def to_sympy(f: PuiseuxFn):
    return sum(
        sp.Rational(c.numerator, c.denominator) * X[0] ** sp.Rational(e[0]) * X[1] ** sp.Rational(e[1])
        for e, c in f.terms.items()
    )


def test_formatting():
    assert str(PuiseuxFn.monomial(2, (H, 0))) == "x1^(1/2)"
    assert str(PuiseuxFn(2, {(2, 0): H, (1, 0): -H})) == "1/2*x1^2 - 1/2*x1"
    assert str(PuiseuxFn(2, {})) == "0"
    with pytest.raises(ValueError):
        PuiseuxFn.monomial(2, (Fraction(1, 3), 0))


def test_examples_by_sympy():
    P = example_params()
    for name, f in example_functions().items():
        for i in (1, 2):
            assert sp.simplify(weyl_apply(ell(P, i), to_sympy(f))) == 0, name


def test_example_checks():
    checks = check_example_solutions()
    assert len(checks) == 9
    assert all(c.passed for c in checks)
    control = checks[-1]
    assert control.detail["result"] == "1/2*x1^2 - 1/2*x1"


def test_symbolic_coefficients_rejected():
    with pytest.raises(UnspecializedParameter):
        apply_to_puiseux(ell(ParamSet.symbolic(2), 1), PuiseuxFn.const(2, 1))


half_ints = st.integers(-4, 6).map(lambda k: Fraction(k, 2))


@given(st.dictionaries(st.tuples(half_ints, half_ints), st.integers(-3, 3), max_size=3))
@settings(max_examples=30, deadline=None)
def test_action_matches_sympy(terms):
    f = PuiseuxFn(2, terms)
    P = example_params()
    got = to_sympy(apply_to_puiseux(ell(P, 1), f))
    assert sp.simplify(got - weyl_apply(ell(P, 1), to_sympy(f))) == 0
