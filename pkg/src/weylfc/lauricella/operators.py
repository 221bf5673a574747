"""Constructors for the Lauricella F_C operator families.

x-coordinates (plain D):
    ell_i    = theta_i (theta_i + c_i - 1) - x_i (theta + a)(theta + b)
    ell_ij   = x_j ell_i - x_i ell_j
y-coordinates, y_i = 1/x_i (plain D, letter ``y``):
    ell'_i   = y_i theta_i (theta_i - c_i + 1) - (theta - a)(theta - b)
homogenized (D^(h)):
    S_i      = theta_i (theta_i + (c_i - 1) h^2)
    S_ab     = (theta + a h^2)(theta + b h^2)
    T_i      = h S_i - x_i S_ab
    T_ij     = x_j S_i - x_i S_j          (T_ji = -T_ij for free)
principal symbols (commutative, in x/y and xi):
    L_i      = x_i^2 xi_i^2 - x_i (sum x_j xi_j)^2
    L'_i     = y_i^3 xi_i^2 - (sum y_j xi_j)^2
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..cpoly import CPoly
from ..errors import IndexOutOfRange
from ..scalars import ParamScalar, Scalarish
from ..weyl import WeylContext, WeylElement, theta_total

KINDS = ("ell", "ell_prime", "L", "L_prime", "S_i", "S_ab", "T_i", "T_ij", "ell_ij")


@dataclass(frozen=True)
class ParamSet:
    m: int
    a: ParamScalar
    b: ParamScalar
    c: tuple[ParamScalar, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be at least 1")
        if len(self.c) != self.m:
            raise ValueError(f"expected {self.m} values c_i, got {len(self.c)}")

    @classmethod
    def symbolic(cls, m: int) -> "ParamSet":
        return cls(
            m,
            ParamScalar.symbol("a"),
            ParamScalar.symbol("b"),
            tuple(ParamScalar.symbol(f"c{i}") for i in range(1, m + 1)),
        )

    @classmethod
    def rational(cls, m: int, a: Scalarish | str, b: Scalarish | str, c: Sequence[Scalarish | str]) -> "ParamSet":
        """Fixed values; strings such as ``"-1/2"`` are read as exact rationals."""

        def co(v):
            return ParamScalar.coerce(Fraction(v) if isinstance(v, str) else v)

        return cls(m, co(a), co(b), tuple(co(v) for v in c))

    @classmethod
    def random(cls, m: int, rng: random.Random, max_den: int = 97) -> "ParamSet":
        """Rational parameters drawn from ``rng`` (numerators and denominators bounded)."""

        def draw() -> Fraction:
            return Fraction(rng.randint(-10 * max_den, 10 * max_den), rng.randint(1, max_den))

        return cls.rational(m, draw(), draw(), [draw() for _ in range(m)])

    @property
    def is_symbolic(self) -> bool:
        return not all(v.is_constant() for v in (self.a, self.b, *self.c))

    def values(self) -> dict[str, Fraction]:
        """Rational values as a ``{name: value}`` map (specialized sets only)."""
        out = {"a": self.a.constant_value(), "b": self.b.constant_value()}
        for i, ci in enumerate(self.c, start=1):
            out[f"c{i}"] = ci.constant_value()
        return out

    def shifted(self, da: Scalarish, db: Scalarish) -> "ParamSet":
        return ParamSet(self.m, self.a + da, self.b + db, self.c)


def _idx(P: ParamSet, *indices: int) -> None:
    for i in indices:
        if not 1 <= i <= P.m:
            raise IndexOutOfRange(f"index {i} outside 1..{P.m}")


def x_context(m: int) -> WeylContext:
    return WeylContext(m)


def y_context(m: int) -> WeylContext:
    return WeylContext(m, letter="y")


def h_context(m: int) -> WeylContext:
    return WeylContext(m, homogenized=True)


def ell(P: ParamSet, i: int) -> WeylElement:
    _idx(P, i)
    ctx = x_context(P.m)
    th_i = WeylElement.theta(ctx, i)
    th = theta_total(ctx)
    return th_i * (th_i + (P.c[i - 1] - 1)) - WeylElement.x(ctx, i) * (th + P.a) * (th + P.b)


def ell_ij(P: ParamSet, i: int, j: int) -> WeylElement:
    _idx(P, i, j)
    ctx = x_context(P.m)
    return WeylElement.x(ctx, j) * ell(P, i) - WeylElement.x(ctx, i) * ell(P, j)


def ell_prime(P: ParamSet, i: int) -> WeylElement:
    _idx(P, i)
    ctx = y_context(P.m)
    th_i = WeylElement.theta(ctx, i)
    th = theta_total(ctx)
    return WeylElement.x(ctx, i) * th_i * (th_i - P.c[i - 1] + 1) - (th - P.a) * (th - P.b)


def S(P: ParamSet, i: int) -> WeylElement:
    _idx(P, i)
    ctx = h_context(P.m)
    th_i = WeylElement.theta(ctx, i)
    h2 = WeylElement.h(ctx) ** 2
    return th_i * (th_i + h2 * (P.c[i - 1] - 1))


def S_ab(P: ParamSet, shift_a: Scalarish = 0, shift_b: Scalarish = 0) -> WeylElement:
    """``(theta + (a+shift_a) h^2)(theta + (b+shift_b) h^2)``."""
    ctx = h_context(P.m)
    th = theta_total(ctx)
    h2 = WeylElement.h(ctx) ** 2
    return (th + h2 * (P.a + shift_a)) * (th + h2 * (P.b + shift_b))


def T(P: ParamSet, i: int) -> WeylElement:
    ctx = h_context(P.m)
    return WeylElement.h(ctx) * S(P, i) - WeylElement.x(ctx, i) * S_ab(P)


def T_pair(P: ParamSet, i: int, j: int) -> WeylElement:
    if i == j:
        raise IndexOutOfRange("T_ij needs distinct indices")
    ctx = h_context(P.m)
    return WeylElement.x(ctx, j) * S(P, i) - WeylElement.x(ctx, i) * S(P, j)


def _linear_symbol(ctx: tuple, letter: str, m: int) -> CPoly:
    total = CPoly.zero(ctx)
    for j in range(1, m + 1):
        total = total + CPoly.var(ctx, f"{letter}{j}") * CPoly.var(ctx, f"xi{j}")
    return total


def L(P: ParamSet | int, i: int) -> CPoly:
    m = P if isinstance(P, int) else P.m
    ctx = x_context(m).symbol_context()
    if not 1 <= i <= m:
        raise IndexOutOfRange(f"index {i} outside 1..{m}")
    xi_, ei = CPoly.var(ctx, f"x{i}"), CPoly.var(ctx, f"xi{i}")
    return xi_**2 * ei**2 - xi_ * _linear_symbol(ctx, "x", m) ** 2


def L_prime(P: ParamSet | int, i: int) -> CPoly:
    m = P if isinstance(P, int) else P.m
    ctx = y_context(m).symbol_context()
    if not 1 <= i <= m:
        raise IndexOutOfRange(f"index {i} outside 1..{m}")
    yi, ei = CPoly.var(ctx, f"y{i}"), CPoly.var(ctx, f"xi{i}")
    return yi**3 * ei**2 - _linear_symbol(ctx, "y", m) ** 2


def make_operator(kind: str, P: ParamSet, i: int | None = None, j: int | None = None):
    """Build one operator of the named family.

    ``L`` and ``L_prime`` are principal symbols and come back as CPoly; every
    other kind is a WeylElement.  Pair kinds require ``1 <= i < j <= m``.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown operator kind {kind!r}; choose from {KINDS}")
    if kind == "S_ab":
        return S_ab(P)
    if i is None:
        raise IndexOutOfRange(f"{kind} needs an index i")
    if kind in ("T_ij", "ell_ij"):
        if j is None or not 1 <= i < j <= P.m:
            raise IndexOutOfRange(f"{kind} needs 1 <= i < j <= {P.m}, got ({i}, {j})")
        return T_pair(P, i, j) if kind == "T_ij" else ell_ij(P, i, j)
    builders = {"ell": ell, "ell_prime": ell_prime, "L": L, "L_prime": L_prime, "S_i": S, "T_i": T}
    return builders[kind](P, i)


def groebner_family_T(P: ParamSet) -> list[WeylElement]:
    """``[T_1, ..., T_m, T_12, T_13, ..., T_{m-1,m}]``."""
    gens = [T(P, i) for i in range(1, P.m + 1)]
    gens += [T_pair(P, i, j) for i in range(1, P.m + 1) for j in range(i + 1, P.m + 1)]
    return gens
