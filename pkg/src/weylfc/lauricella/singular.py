"""The singular-locus polynomial prod_eps (1 + sum eps_j sqrt(x_j)) and the
coefficient-matrix determinant, computed with surrogates t_i = sqrt(x_i)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from ..cpoly import CPoly
from ..errors import IndexOutOfRange
from ..scalars import Scalarish


def sign_vectors(m: int) -> list[tuple[int, ...]]:
    """All of {+1,-1}^m, starting from (1, ..., 1)."""
    return list(product((1, -1), repeat=m))


def x_names(m: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, m + 1))


class SqrtPoly:
    """Polynomial in x_1..x_m, t_1..t_m kept reduced modulo t_i^2 - x_i."""

    __slots__ = ("m", "poly")

    def __init__(self, m: int, poly: CPoly):
        if poly.context != self.context_for(m):
            raise ValueError("SqrtPoly needs the (x_1..x_m, t_1..t_m) context")
        self.m = m
        self.poly = _reduce(m, poly)

    @staticmethod
    def context_for(m: int) -> tuple[str, ...]:
        return x_names(m) + tuple(f"t{i}" for i in range(1, m + 1))

    @classmethod
    def const(cls, m: int, c: Scalarish) -> "SqrtPoly":
        return cls(m, CPoly.const(cls.context_for(m), c))

    @classmethod
    def x(cls, m: int, i: int) -> "SqrtPoly":
        _check(m, i)
        return cls(m, CPoly.var(cls.context_for(m), f"x{i}"))

    @classmethod
    def t(cls, m: int, i: int) -> "SqrtPoly":
        _check(m, i)
        return cls(m, CPoly.var(cls.context_for(m), f"t{i}"))

    @classmethod
    def from_x(cls, m: int, p: CPoly) -> "SqrtPoly":
        return cls(m, p.embed(cls.context_for(m)))

    def _coerce(self, other) -> "SqrtPoly":
        if isinstance(other, SqrtPoly):
            if other.m != self.m:
                raise ValueError("SqrtPoly dimension mismatch")
            return other
        return SqrtPoly.const(self.m, other)

    def __add__(self, other) -> "SqrtPoly":
        return SqrtPoly(self.m, self.poly + self._coerce(other).poly)

    __radd__ = __add__

    def __neg__(self) -> "SqrtPoly":
        return SqrtPoly(self.m, -self.poly)

    def __sub__(self, other) -> "SqrtPoly":
        return SqrtPoly(self.m, self.poly - self._coerce(other).poly)

    def __rsub__(self, other) -> "SqrtPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "SqrtPoly":
        return SqrtPoly(self.m, self.poly * self._coerce(other).poly)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SqrtPoly):
            return NotImplemented
        return self.m == other.m and self.poly == other.poly

    def __hash__(self) -> int:
        return hash((self.m, self.poly))

    def __bool__(self) -> bool:
        return bool(self.poly)

    def has_t(self) -> bool:
        return any(any(e[self.m:]) for e in self.poly.terms)

    def to_x(self) -> CPoly:
        """The polynomial in x alone; fails if any t survives."""
        if self.has_t():
            raise ValueError(f"residual square roots in {self}")
        return self.poly.drop_variables(x_names(self.m))

    def divide_by_monomial(self, exps: Sequence[int]) -> "SqrtPoly":
        """Exact division by an x-monomial."""
        shift = tuple(exps) + (0,) * self.m
        out = {}
        for e, c in self.poly.terms.items():
            ne = tuple(a - b for a, b in zip(e, shift))
            if min(ne) < 0:
                raise ValueError("monomial does not divide")
            out[ne] = c
        return SqrtPoly(self.m, CPoly(self.poly.context, out))

    def __str__(self) -> str:
        return str(self.poly)

    def __repr__(self) -> str:
        return f"SqrtPoly({self})"


def _check(m: int, i: int) -> None:
    if not 1 <= i <= m:
        raise IndexOutOfRange(f"index {i} outside 1..{m}")


def _reduce(m: int, p: CPoly) -> CPoly:
    if all(k <= 1 for e in p.terms for k in e[m:]):
        return p
    out: dict = {}
    for e, c in p.terms.items():
        xs, ts = list(e[:m]), list(e[m:])
        for i, k in enumerate(ts):
            xs[i] += k // 2
            ts[i] = k % 2
        key = tuple(xs + ts)
        out[key] = out[key] + c if key in out else c
    return CPoly(p.context, out)


def linear_factor(m: int, eps: Sequence[int]) -> SqrtPoly:
    """``1 + sum eps_j t_j``."""
    if len(eps) != m or any(s not in (1, -1) for s in eps):
        raise ValueError(f"sign vector must have {m} entries in {{+1,-1}}")
    out = SqrtPoly.const(m, 1)
    for j, s in enumerate(eps, start=1):
        out = out + SqrtPoly.t(m, j) * s
    return out


def singular_locus_poly(m: int) -> CPoly:
    """Expand ``prod_eps (1 + sum eps_j sqrt(x_j))`` into a polynomial in x."""
    if m < 1:
        raise ValueError("m must be at least 1")
    total = SqrtPoly.const(m, 1)
    for eps in sign_vectors(m):
        total = total * linear_factor(m, eps)
    # odd powers of every t_i cancel because the product is symmetric under t_i -> -t_i
    assert not total.has_t(), "odd square-root terms survived the expansion"
    return total.to_x()


def coordinate_component(m: int) -> CPoly:
    """``x_1 x_2 ... x_m``, the coordinate-hyperplane part of the singular locus."""
    return CPoly.monomial(x_names(m), (1,) * m)


def coefficient_matrix(m: int, eps: Sequence[int]) -> list[list[SqrtPoly]]:
    """``M[i][k] = delta_ik x_i + eps_i x_k sqrt(x_i)`` (rows and columns from 0)."""
    if len(eps) != m:
        raise ValueError(f"sign vector must have {m} entries")
    rows = []
    for i in range(1, m + 1):
        t_i = SqrtPoly.t(m, i) * eps[i - 1]
        row = []
        for k in range(1, m + 1):
            entry = SqrtPoly.x(m, k) * t_i
            if i == k:
                entry = entry + SqrtPoly.x(m, i)
            row.append(entry)
        rows.append(row)
    return rows


def determinant(M: list[list[SqrtPoly]]) -> SqrtPoly:
    """Cofactor expansion along the first row."""
    n = len(M)
    if n == 1:
        return M[0][0]
    total = None
    for k in range(n):
        if not M[0][k]:
            continue
        minor = [row[:k] + row[k + 1:] for row in M[1:]]
        term = M[0][k] * determinant(minor)
        if k % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else M[0][0] * 0


def coeff_matrix_det(m: int, eps: Sequence[int]) -> SqrtPoly:
    return determinant(coefficient_matrix(m, eps))


def det_closed_form(m: int, eps: Sequence[int]) -> SqrtPoly:
    """``x_1 ... x_m (1 + sum eps_j t_j)``."""
    return SqrtPoly.from_x(m, coordinate_component(m)) * linear_factor(m, eps)


def singular_locus_via_det(m: int) -> CPoly:
    """Second route: multiply ``det M(eps) / (x_1 ... x_m)`` over all sign vectors."""
    total = SqrtPoly.const(m, 1)
    for eps in sign_vectors(m):
        total = total * coeff_matrix_det(m, eps).divide_by_monomial((1,) * m)
    return total.to_x()


@dataclass
class PointTest:
    """Which singular-locus components vanish at a rational point."""

    m: int
    point: tuple[Fraction, ...]
    vanishing: list[str] = field(default_factory=list)
    polynomial_value: Fraction = Fraction(0)

    @property
    def member(self) -> bool:
        return bool(self.vanishing)


def singular_point_test(m: int, point: Sequence[Scalarish]) -> PointTest:
    if len(point) != m:
        raise ValueError(f"point needs {m} coordinates, got {len(point)}")
    pt = tuple(Fraction(v) for v in point)
    out = PointTest(m, pt)
    for i, v in enumerate(pt, start=1):
        if v == 0:
            out.vanishing.append(f"x{i}")
    out.polynomial_value = singular_locus_poly(m).evaluate(pt).constant_value()
    if out.polynomial_value == 0:
        out.vanishing.append("product")
    return out
