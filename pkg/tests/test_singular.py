from fractions import Fraction
from itertools import product

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import cpoly_to_sympy, frac
from weylfc.lauricella.singular import (
    SqrtPoly,
    coeff_matrix_det,
    coefficient_matrix,
    coordinate_component,
    det_closed_form,
    linear_factor,
    sign_vectors,
    singular_locus_poly,
    singular_locus_via_det,
    singular_point_test,
)


def _sqrt_to_sympy(p: SqrtPoly):
    m = p.m
    xs = sp.symbols(f"x1:{m + 1}", positive=True)
    return cpoly_to_sympy(p.poly, {f"t{i}": sp.sqrt(xs[i - 1]) for i in range(1, m + 1)}
                          | {f"x{i}": xs[i - 1] for i in range(1, m + 1)})


def _sympy_product(m):
    """Oracle: expand prod_eps (1 + sum eps_j sqrt(x_j)) in sympy."""
    xs = sp.symbols(f"x1:{m + 1}", positive=True)
    total = sp.Integer(1)
    for eps in product((1, -1), repeat=m):
        total *= 1 + sum(e * sp.sqrt(x) for e, x in zip(eps, xs))
    return sp.expand(total), xs


def test_sign_vectors():
    assert len(sign_vectors(3)) == 8
    assert sign_vectors(1) == [(1,), (-1,)]


def test_sqrt_poly_reduction():
    t = SqrtPoly.t(2, 1)
    assert (t * t) == SqrtPoly.x(2, 1)
    assert not (t * t).has_t()
    assert (t * t * t).has_t()


@pytest.mark.parametrize("m", [1, 2, 3])
def test_locus_polynomial_matches_sympy(m):
    expected, xs = _sympy_product(m)
    got = cpoly_to_sympy(singular_locus_poly(m), {f"x{i}": xs[i - 1] for i in range(1, m + 1)})
    assert sp.expand(got - expected) == 0


def test_locus_fixtures():
    assert str(singular_locus_poly(1)) == "-x1 + 1"
    assert str(singular_locus_poly(2)) == "x1^2 - 2*x1*x2 + x2^2 - 2*x1 - 2*x2 + 1"
    assert str(coordinate_component(3)) == "x1*x2*x3"


@pytest.mark.parametrize("m", [1, 2, 3])
def test_determinant_matches_sympy(m):
    xs = sp.symbols(f"x1:{m + 1}", positive=True)
    for eps in sign_vectors(m):
        M = sp.Matrix(m, m, lambda i, k: (xs[i] if i == k else 0) + eps[i] * xs[k] * sp.sqrt(xs[i]))
        ours = _sqrt_to_sympy(coeff_matrix_det(m, eps))
        assert sp.expand(M.det() - ours) == 0


def test_determinant_closed_form_m4():
    for eps in sign_vectors(4):
        assert coeff_matrix_det(4, eps) == det_closed_form(4, eps)


def test_two_routes_agree():
    for m in (1, 2, 3):
        assert singular_locus_via_det(m) == singular_locus_poly(m)


def test_linear_factor_validation():
    with pytest.raises(ValueError):
        linear_factor(2, (1, 0))
    with pytest.raises(ValueError):
        coefficient_matrix(2, (1,))


def test_point_test():
    on = singular_point_test(2, ["1/4", "1/4"])
    assert on.member and on.vanishing == ["product"]
    off = singular_point_test(2, [1, 1])
    assert not off.member
    # 1 - 2 - 2 + 1 + 1 - 2
    assert off.polynomial_value == -3
    axis = singular_point_test(2, [0, 5])
    assert axis.vanishing[0] == "x1"
    with pytest.raises(ValueError):
        singular_point_test(2, [1])


@given(st.lists(st.fractions(0, 4, max_denominator=5), min_size=2, max_size=2))
@settings(max_examples=40, deadline=None)
def test_point_value_matches_sympy(pt):
    expected, xs = _sympy_product(2)
    value = expected.subs({x: frac(v) for x, v in zip(xs, pt)})
    assert frac(singular_point_test(2, pt).polynomial_value) == sp.nsimplify(value)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_no_odd_square_roots(m):
    p = singular_locus_poly(m)
    assert p.total_degree() == 2 ** (m - 1)
    assert p.evaluate([Fraction(0)] * m).constant_value() == 1
