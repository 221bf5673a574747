"""Normally ordered arithmetic in the Weyl algebra D and its homogenization D^(h).

An element is a sparse map from exponent tuples ``alpha + beta + (k,)`` to
ParamScalar coefficients, standing for ``c * x^alpha * d^beta * h^k``.  In the
plain algebra ``k`` is always 0.  The defining relation is
``d_i x_i = x_i d_i + 1`` (``+ h^2`` when homogenized).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, perm
from typing import Mapping, Sequence

from .cpoly import format_terms
from .errors import ContextMismatch, IndexOutOfRange
from .scalars import ONE, ParamScalar, Scalarish


@dataclass(frozen=True)
class WeylContext:
    """``n`` variables named ``<letter>1..<letter>n`` with derivations ``d1..dn``."""

    n: int
    homogenized: bool = False
    letter: str = "x"

    def x_name(self, i: int) -> str:
        return f"{self.letter}{i}"

    def d_name(self, i: int) -> str:
        return f"d{i}"

    def plain(self) -> "WeylContext":
        return WeylContext(self.n, False, self.letter)

    def homog(self) -> "WeylContext":
        return WeylContext(self.n, True, self.letter)

    def symbol_context(self) -> tuple[str, ...]:
        """Variable names of the commutative (x, xi) ring of principal symbols."""
        return tuple(self.x_name(i) for i in range(1, self.n + 1)) + tuple(
            f"xi{i}" for i in range(1, self.n + 1)
        )

    def check_index(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"variable index {i} outside 1..{self.n}")


@lru_cache(maxsize=None)
def _mono_product(e1: tuple, e2: tuple, n: int, homog: bool) -> tuple:
    """Normal ordering of ``(x^a1 d^b1 h^k1)(x^a2 d^b2 h^k2)``.

    Leibniz: ``d^b x^c = sum_k C(b,k) c!/(c-k)! x^(c-k) d^(b-k)`` per variable,
    each commutation step contributing ``h^2`` in the homogenized algebra.
    """
    a1, b1, k1 = e1[:n], e1[n:2 * n], e1[2 * n]
    a2, b2, k2 = e2[:n], e2[n:2 * n], e2[2 * n]
    ranges = []
    for i in range(n):
        top = min(b1[i], a2[i])
        ranges.append([(j, comb(b1[i], j) * perm(a2[i], j)) for j in range(top + 1)])
    out = []
    for choice in product(*ranges):
        coeff = 1
        kap = 0
        alpha = []
        beta = []
        for i, (j, c) in enumerate(choice):
            coeff *= c
            kap += j
            alpha.append(a1[i] + a2[i] - j)
            beta.append(b1[i] - j + b2[i])
        k = k1 + k2 + 2 * kap if homog else 0
        out.append((tuple(alpha) + tuple(beta) + (k,), coeff))
    return tuple(out)


class WeylElement:
    """Immutable element of D or D^(h) in normally ordered form."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: WeylContext, terms: Mapping[tuple, Scalarish] | None = None):
        self.ctx = ctx
        width = 2 * ctx.n + 1
        clean: dict[tuple, ParamScalar] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != width or any(k < 0 for k in e):
                raise ValueError(f"bad exponent tuple {e}")
            if not ctx.homogenized and e[-1]:
                raise ContextMismatch("h occurs in a plain Weyl algebra element")
            c = ParamScalar.coerce(c)
            if c:
                prev = clean.get(e)
                c = c if prev is None else prev + c
                if c:
                    clean[e] = c
                else:
                    clean.pop(e, None)
        self.terms = clean

    @classmethod
    def _raw(cls, ctx: WeylContext, terms: dict) -> "WeylElement":
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.terms = terms
        return obj

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, ctx: WeylContext) -> "WeylElement":
        return cls._raw(ctx, {})

    @classmethod
    def const(cls, ctx: WeylContext, c: Scalarish) -> "WeylElement":
        return cls(ctx, {(0,) * (2 * ctx.n + 1): c})

    @classmethod
    def monomial(
        cls,
        ctx: WeylContext,
        alpha: Sequence[int],
        beta: Sequence[int],
        k: int = 0,
        coeff: Scalarish = 1,
    ) -> "WeylElement":
        return cls(ctx, {tuple(alpha) + tuple(beta) + (k,): coeff})

    @classmethod
    def x(cls, ctx: WeylContext, i: int) -> "WeylElement":
        ctx.check_index(i)
        return cls.monomial(ctx, _unit(ctx.n, i), (0,) * ctx.n)

    @classmethod
    def d(cls, ctx: WeylContext, i: int) -> "WeylElement":
        ctx.check_index(i)
        return cls.monomial(ctx, (0,) * ctx.n, _unit(ctx.n, i))

    @classmethod
    def h(cls, ctx: WeylContext) -> "WeylElement":
        if not ctx.homogenized:
            raise ContextMismatch("h only exists in the homogenized Weyl algebra")
        return cls.monomial(ctx, (0,) * ctx.n, (0,) * ctx.n, 1)

    @classmethod
    def theta(cls, ctx: WeylContext, i: int) -> "WeylElement":
        """Euler operator ``x_i d_i``."""
        ctx.check_index(i)
        return cls.monomial(ctx, _unit(ctx.n, i), _unit(ctx.n, i))

    # -- queries ------------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def total_degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.total_degrees()) <= 1

    def is_parameter_free(self) -> bool:
        return all(c.is_constant() for c in self.terms.values())

    def coefficient(self, alpha, beta, k: int = 0) -> ParamScalar:
        return self.terms.get(tuple(alpha) + tuple(beta) + (k,), ParamScalar.const(0))

    # -- arithmetic -------------------------------------------------------
    def _lift(self, other) -> "WeylElement":
        if isinstance(other, WeylElement):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"{self.ctx} vs {other.ctx}")
            return other
        if isinstance(other, (int, Fraction, ParamScalar)):
            return WeylElement.const(self.ctx, other)
        return NotImplemented

    def __add__(self, other) -> "WeylElement":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out[e] + c if e in out else c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return WeylElement._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self) -> "WeylElement":
        return WeylElement._raw(self.ctx, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "WeylElement":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "WeylElement":
        return (-self) + other

    def scale(self, c: Scalarish) -> "WeylElement":
        c = ParamScalar.coerce(c)
        out = {}
        for e, v in self.terms.items():
            vc = v * c
            if vc:
                out[e] = vc
        return WeylElement._raw(self.ctx, out)

    def __mul__(self, other) -> "WeylElement":
        if isinstance(other, (int, Fraction, ParamScalar)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return weyl_mul(self, other)

    def __rmul__(self, other) -> "WeylElement":
        if isinstance(other, (int, Fraction, ParamScalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "WeylElement":
        result = WeylElement.const(self.ctx, 1)
        for _ in range(n):
            result = weyl_mul(result, self)
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, ParamScalar)):
            other = WeylElement.const(self.ctx, other)
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ctx, frozenset(self.terms.items())))

    def specialize(self, values: Mapping[str, Fraction]) -> "WeylElement":
        return WeylElement(self.ctx, {e: c.specialize(values) for e, c in self.terms.items()})

    # -- display ----------------------------------------------------------
    def monomial_text(self, e: tuple) -> str:
        n = self.ctx.n
        parts = []
        for i in range(n):
            k = e[i]
            if k:
                name = self.ctx.x_name(i + 1)
                parts.append(name if k == 1 else f"{name}^{k}")
        for i in range(n):
            k = e[n + i]
            if k:
                name = self.ctx.d_name(i + 1)
                parts.append(name if k == 1 else f"{name}^{k}")
        if e[2 * n]:
            parts.append("h" if e[2 * n] == 1 else f"h^{e[2 * n]}")
        return "*".join(parts)

    def sorted_terms(self) -> list[tuple[tuple, ParamScalar]]:
        n = self.ctx.n
        # Display order: total degree, then d-degree, then exponents; descending.
        return sorted(
            self.terms.items(),
            key=lambda t: (sum(t[0]), sum(t[0][n:2 * n]), t[0][n:2 * n], t[0][:n], t[0][2 * n]),
            reverse=True,
        )

    def __str__(self) -> str:
        return format_terms((c, self.monomial_text(e)) for e, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"WeylElement({self})"


def _unit(n: int, i: int) -> tuple:
    return tuple(int(j == i - 1) for j in range(n))


def weyl_mul(p: WeylElement, q: WeylElement) -> WeylElement:
    """Normally ordered product ``p * q``."""
    if p.ctx != q.ctx:
        raise ContextMismatch(f"{p.ctx} vs {q.ctx}")
    n, homog = p.ctx.n, p.ctx.homogenized
    acc: dict[tuple, dict] = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            cc = c1 * c2
            for e, k in _mono_product(e1, e2, n, homog):
                slot = acc.get(e)
                if slot is None:
                    slot = acc[e] = {}
                for pm, v in cc.terms.items():
                    slot[pm] = slot.get(pm, 0) + v * k
    out = {}
    for e, slot in acc.items():
        clean = {pm: v for pm, v in slot.items() if v}
        if clean:
            out[e] = ParamScalar._raw(clean)
    return WeylElement._raw(p.ctx, out)


def sum_elements(ctx: WeylContext, elements) -> WeylElement:
    total = WeylElement.zero(ctx)
    for el in elements:
        total = total + el
    return total


def theta_total(ctx: WeylContext) -> WeylElement:
    """``theta = theta_1 + ... + theta_n``."""
    return sum_elements(ctx, (WeylElement.theta(ctx, i) for i in range(1, ctx.n + 1)))


def homogenize(p: WeylElement) -> WeylElement:
    """Lift a plain element to D^(h), padding each term with h to the top degree."""
    if p.ctx.homogenized:
        raise ContextMismatch("homogenize expects an element of the plain Weyl algebra")
    ctx = p.ctx.homog()
    if not p.terms:
        return WeylElement.zero(ctx)
    top = max(sum(e) for e in p.terms)
    return WeylElement._raw(ctx, {e[:-1] + (top - sum(e),): c for e, c in p.terms.items()})


def dehomogenize(p: WeylElement) -> WeylElement:
    """Set h = 1; a ring homomorphism D^(h) -> D."""
    if not p.ctx.homogenized:
        raise ContextMismatch("dehomogenize expects an element of D^(h)")
    ctx = p.ctx.plain()
    return WeylElement(ctx, _merge((e[:-1] + (0,), c) for e, c in p.terms.items()))


def _merge(pairs) -> dict:
    out: dict[tuple, ParamScalar] = {}
    for e, c in pairs:
        out[e] = out[e] + c if e in out else c
    return out


def left_divisible_by_var(p: WeylElement, i: int) -> bool:
    """True iff ``p`` lies in ``x_i * D``: every normally ordered term has x_i."""
    p.ctx.check_index(i)
    return all(e[i - 1] >= 1 for e in p.terms)


def left_quotient_by_var(p: WeylElement, i: int) -> WeylElement:
    """The element q with ``p = x_i * q``; requires left divisibility."""
    if not left_divisible_by_var(p, i):
        raise ValueError(f"element is not left divisible by x{i}")
    return WeylElement._raw(
        p.ctx, {tuple(k - 1 if j == i - 1 else k for j, k in enumerate(e)): c for e, c in p.terms.items()}
    )
