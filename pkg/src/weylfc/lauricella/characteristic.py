"""Characteristic ideals: the y-chart Groebner basis, the x-chart principal
symbols L_i, their dimension, and agreement of the two on the torus."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from ..cpoly import CPoly, MonomialOrder, cpoly_buchberger, ideals_equal, saturate
from ..errors import UnspecializedParameter
from ..monomial_ideals import monomial_ideal_dimension
from ..weyl_gb import WeylOrder, principal_symbol, weyl_buchberger
from .operators import L, ParamSet, ell, ell_prime, x_context


def char_ideal_torus(m: int, P: ParamSet | None = None) -> list[CPoly]:
    """Principal symbols of ``l'_1..l'_m`` after confirming they form a
    Groebner basis under the order w."""
    if m < 1:
        raise ValueError("m must be at least 1")
    P = P or ParamSet.symbolic(m)
    gens = [ell_prime(P, i) for i in range(1, m + 1)]
    basis = weyl_buchberger(gens, WeylOrder.w(m))
    if len(basis) != len(gens):
        raise AssertionError(f"Buchberger added {len(basis) - len(gens)} elements")
    return [principal_symbol(g) for g in gens]


def y_to_x_symbol(p: CPoly, m: int) -> CPoly:
    """Map a symbol in (y, xi) to (x, xi) under ``y = 1/x``.

    Covectors transform by the inverse transpose Jacobian, so
    ``xi_y -> -x^2 xi_x``.  The result is multiplied by the smallest
    x-monomial that clears denominators.
    """
    out_ctx = x_context(m).symbol_context()
    shifted = {}
    for e, c in p.terms.items():
        alpha, beta = e[:m], e[m:2 * m]
        xe = tuple(2 * b - a for a, b in zip(alpha, beta))
        sign = -1 if sum(beta) % 2 else 1
        shifted[xe + tuple(beta)] = c * sign
    clear = [max(0, -min(e[j] for e in shifted)) for j in range(m)]
    return CPoly(
        out_ctx,
        {tuple(e[j] + clear[j] for j in range(m)) + e[m:]: c for e, c in shifted.items()},
    )


def symbol_order(m: int) -> MonomialOrder:
    return MonomialOrder.degrevlex(2 * m)


def leading_dimension(gens: list[CPoly], order: MonomialOrder) -> int:
    gb = cpoly_buchberger(gens, order)
    return monomial_ideal_dimension([g.leading_monomial(order) for g in gb], len(gens[0].context))


@dataclass
class DimensionResult:
    m: int
    params: dict[str, Fraction]
    dimension: int
    torus_dimension: int
    symbols_match: bool


def char_dimension(m: int, P: ParamSet) -> DimensionResult:
    """Dimension of V(<L_1..L_m>) from the principal symbols of the
    specialized operators, plus the same for the y-chart basis mapped to x."""
    if P.is_symbolic:
        raise UnspecializedParameter("char_dimension needs rational parameter values")
    order = symbol_order(m)
    symbols = [principal_symbol(ell(P, i)) for i in range(1, m + 1)]
    match = all(s == L(m, i) for i, s in enumerate(symbols, start=1))
    torus = [y_to_x_symbol(s, m) for s in char_ideal_torus(m, P)]
    return DimensionResult(
        m,
        P.values(),
        leading_dimension(symbols, order),
        leading_dimension(torus, order),
        match,
    )


def holonomic_dimension_check(m: int, seed: int = 0, draws: int = 2) -> list[DimensionResult]:
    """``char_dimension`` at independent random rational specializations."""
    rng = random.Random(seed)
    return [char_dimension(m, ParamSet.random(m, rng)) for _ in range(draws)]


def torus_agreement(m: int, P: ParamSet | None = None) -> bool:
    """<L_i> and the mapped y-chart basis agree after saturating by x_1...x_m."""
    P = P or ParamSet.symbolic(m)
    order = symbol_order(m)
    ctx = x_context(m).symbol_context()
    xs = CPoly.monomial(ctx, (1,) * m + (0,) * m)
    lhs = saturate([L(m, i) for i in range(1, m + 1)], xs, order)
    rhs = saturate([y_to_x_symbol(s, m) for s in char_ideal_torus(m, P)], xs, order)
    return ideals_equal(lhs, rhs, order)
