import random

import pytest
import sympy as sp

from conftest import cpoly_to_sympy
from weylfc.errors import UnspecializedParameter
from weylfc.lauricella.characteristic import (
    char_dimension,
    char_ideal_torus,
    holonomic_dimension_check,
    torus_agreement,
    y_to_x_symbol,
)
from weylfc.lauricella.operators import L, L_prime, ParamSet


def test_char_ideal_generators():
    for m in (2, 3):
        assert char_ideal_torus(m) == [L_prime(m, i) for i in range(1, m + 1)]


def test_y_to_x_symbol():
    # L'_i -> x_i xi_i^2 - (sum x_j xi_j)^2 after clearing x-denominators
    mapped = y_to_x_symbol(L_prime(2, 1), 2)
    assert str(mapped) == "-x1^2*xi1^2 - 2*x1*x2*xi1*xi2 - x2^2*xi2^2 + x1*xi1^2"
    x1 = L(2, 1).var(L(2, 1).context, "x1")
    assert x1 * mapped == L(2, 1)


def _sympy_dimension(m):
    """Oracle: sympy's grevlex basis, then the largest variable set free of leading monomials."""
    gens = sp.symbols(" ".join([f"x{i}" for i in range(1, m + 1)] + [f"xi{i}" for i in range(1, m + 1)]))
    G = sp.groebner([cpoly_to_sympy(L(m, i)) for i in range(1, m + 1)], *gens, order="grevlex")
    leads = [sp.Poly(sp.LM(g, *gens, order="grevlex"), *gens).monoms()[0] for g in G.exprs]
    n = len(gens)
    best = 0
    for mask in range(1 << n):
        if all(any(e[k] and not mask >> k & 1 for k in range(n)) for e in leads):
            best = max(best, bin(mask).count("1"))
    return best


@pytest.mark.parametrize("m", [1, 2, 3])
def test_dimension_is_m(m):
    P = ParamSet.random(m, random.Random(7))
    d = char_dimension(m, P)
    assert d.dimension == m == _sympy_dimension(m)
    assert d.torus_dimension == m and d.symbols_match


def test_char_dimension_needs_numbers():
    with pytest.raises(UnspecializedParameter):
        char_dimension(2, ParamSet.symbolic(2))


def test_seeded_draws_are_reproducible():
    a = holonomic_dimension_check(2, seed=3)
    b = holonomic_dimension_check(2, seed=3)
    assert [d.params for d in a] == [d.params for d in b]
    assert a[0].params != a[1].params


def test_torus_agreement():
    assert torus_agreement(2)
