from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings

from conftest import param_scalars, scalar_to_sympy, small_fractions
from weylfc.errors import UnspecializedParameter
from weylfc.scalars import ParamScalar, param_index, param_name, parse_rational


def test_param_names_round_trip():
    for name in ["a", "b", "c1", "c2", "c10"]:
        assert param_name(param_index(name)) == name
    with pytest.raises(ValueError):
        param_index("c0")


def test_parse_rational():
    assert parse_rational("-1/2") == Fraction(-1, 2)
    assert parse_rational(" 0.25 ") == Fraction(1, 4)


def test_constant_value_and_symbols():
    a = ParamScalar.symbol("a")
    assert ParamScalar.const(3).constant_value() == 3
    assert (a - a).constant_value() == 0
    assert (a * ParamScalar.symbol("c2")).symbols() == {"a", "c2"}
    with pytest.raises(UnspecializedParameter):
        a.constant_value()


def test_specialize():
    a, b = ParamScalar.symbol("a"), ParamScalar.symbol("b")
    p = a * b + a * 2 - 1
    assert p.specialize({"a": Fraction(1, 2), "b": 4}) == ParamScalar.const(2)
    assert p.specialize({"a": 1}) == b + 1


def test_str_is_readable():
    a, b = ParamScalar.symbol("a"), ParamScalar.symbol("b")
    assert str(-a - b - 1) == "-a - b - 1"
    assert str(ParamScalar.const(Fraction(-1, 2))) == "-1/2"


@given(param_scalars(), param_scalars(), param_scalars())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert p - p == ParamScalar.const(0)


@given(param_scalars(), param_scalars())
@settings(max_examples=60)
def test_arithmetic_matches_sympy(p, q):
    P, Q = scalar_to_sympy(p), scalar_to_sympy(q)
    assert sp.expand(scalar_to_sympy(p * q) - P * Q) == 0
    assert sp.expand(scalar_to_sympy(p - q) - (P - Q)) == 0
    assert sp.expand(scalar_to_sympy(p**2) - P**2) == 0


@given(param_scalars(), small_fractions)
def test_division_by_rational(p, q):
    if q:
        assert (p / q) * q == p
