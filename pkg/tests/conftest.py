"""Independent oracles built on sympy, plus shared hypothesis strategies."""

from __future__ import annotations

from fractions import Fraction

import sympy as sp
from hypothesis import strategies as st

from weylfc.cpoly import CPoly
from weylfc.scalars import ParamScalar, param_name
from weylfc.weyl import WeylContext, WeylElement


def sym(name: str) -> sp.Symbol:
    return sp.Symbol(name)


def scalar_to_sympy(c: ParamScalar) -> sp.Expr:
    total = sp.Integer(0)
    for e, q in c.terms.items():
        term = sp.Rational(q.numerator, q.denominator)
        for i, k in enumerate(e):
            term *= sym(param_name(i)) ** k
        total += term
    return total


def cpoly_to_sympy(p: CPoly, rename: dict[str, sp.Expr] | None = None) -> sp.Expr:
    rename = rename or {}
    names = [rename.get(n, sym(n)) for n in p.context]
    total = sp.Integer(0)
    for e, c in p.terms.items():
        term = scalar_to_sympy(c)
        for v, k in zip(names, e):
            term *= v**k
        total += term
    return sp.expand(total)


def coords(ctx: WeylContext) -> list[sp.Symbol]:
    return [sym(ctx.x_name(i)) for i in range(1, ctx.n + 1)]


def weyl_apply(p: WeylElement, f: sp.Expr) -> sp.Expr:
    """Act on a sympy expression by differentiation (h acts as 1)."""
    xs = coords(p.ctx)
    n = p.ctx.n
    total = sp.Integer(0)
    for e, c in p.terms.items():
        alpha, beta = e[:n], e[n:2 * n]
        g = f
        for v, b in zip(xs, beta):
            if b:
                g = sp.diff(g, v, b)
        mono = sp.Integer(1)
        for v, a in zip(xs, alpha):
            mono *= v**a
        total += scalar_to_sympy(c) * mono * g
    return total


def generic_function(ctx: WeylContext) -> sp.Expr:
    return sp.Function("F")(*coords(ctx))


def acts_equal(p: WeylElement, q: WeylElement) -> bool:
    """Equality of the actions on a generic function (faithful for D)."""
    F = generic_function(p.ctx)
    return sp.expand(weyl_apply(p, F) - weyl_apply(q, F)) == 0


def frac(q) -> sp.Rational:
    q = Fraction(q)
    return sp.Rational(q.numerator, q.denominator)


# -- hypothesis strategies -------------------------------------------------

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def weyl_elements(draw, ctx: WeylContext, max_terms: int = 4, max_exp: int = 2):
    n = ctx.n
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        alpha = tuple(draw(st.integers(0, max_exp)) for _ in range(n))
        beta = tuple(draw(st.integers(0, max_exp)) for _ in range(n))
        k = draw(st.integers(0, 2)) if ctx.homogenized else 0
        terms[alpha + beta + (k,)] = draw(st.integers(-3, 3))
    return WeylElement(ctx, terms)


@st.composite
def param_scalars(draw, max_terms: int = 3):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        e = tuple(draw(st.integers(0, 2)) for _ in range(4))
        terms[e] = draw(small_fractions)
    return ParamScalar(terms)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
