"""Exact coefficients: rationals and polynomials in the parameters a, b, c_i.

Rationals are plain :class:`fractions.Fraction` values.  A :class:`ParamScalar`
is a sparse polynomial in the parameter symbols with rational coefficients.
Its monomials are exponent tuples over ``(a, b, c1, c2, ...)`` with trailing
zeros stripped, so scalars built for different m interoperate.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import zip_longest
from typing import Mapping, Union

from .errors import UnspecializedParameter

Number = Union[int, Fraction]
Scalarish = Union[int, Fraction, "ParamScalar"]

_PARAM_RE = re.compile(r"^(a|b|c([1-9][0-9]*))$")


def param_index(name: str) -> int:
    """Position of a parameter symbol in the exponent tuple."""
    mt = _PARAM_RE.match(name)
    if mt is None:
        raise ValueError(f"not a parameter symbol: {name!r}")
    if name == "a":
        return 0
    if name == "b":
        return 1
    return 1 + int(mt.group(2))


def param_name(index: int) -> str:
    if index == 0:
        return "a"
    if index == 1:
        return "b"
    return f"c{index - 1}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"3"``, ``"-1/2"`` or ``"0.25"`` into an exact Fraction."""
    return Fraction(text.strip())


def _strip(exps: tuple) -> tuple:
    n = len(exps)
    while n and exps[n - 1] == 0:
        n -= 1
    return exps[:n]


def _mono_mul(e1: tuple, e2: tuple) -> tuple:
    if not e1:
        return e2
    if not e2:
        return e1
    return tuple(p + q for p, q in zip_longest(e1, e2, fillvalue=0))


class ParamScalar:
    """Polynomial in a, b, c_1, ..., c_m over Q.  Immutable."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Number] | None = None):
        clean = {}
        if terms:
            for e, q in terms.items():
                if q:
                    e = _strip(tuple(e))
                    clean[e] = clean.get(e, 0) + Fraction(q)
                    if not clean[e]:
                        del clean[e]
        self.terms: dict[tuple, Fraction] = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "ParamScalar":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, q: Number) -> "ParamScalar":
        q = Fraction(q)
        return cls._raw({(): q} if q else {})

    @classmethod
    def symbol(cls, name: str) -> "ParamScalar":
        idx = param_index(name)
        return cls._raw({(0,) * idx + (1,): Fraction(1)})

    @classmethod
    def coerce(cls, value: Scalarish) -> "ParamScalar":
        if isinstance(value, ParamScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.const(value)
        raise TypeError(f"cannot use {type(value).__name__} as a coefficient")

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self) -> Fraction:
        """The rational value; raises if any parameter symbol survives."""
        if not self.terms:
            return Fraction(0)
        if self.is_constant():
            return self.terms[()]
        raise UnspecializedParameter(f"coefficient {self} is not a rational number")

    def symbols(self) -> set[str]:
        return {param_name(i) for e in self.terms for i, k in enumerate(e) if k}

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other: Scalarish) -> "ParamScalar":
        other = _as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, q in other.terms.items():
            s = out.get(e, 0) + q
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return ParamScalar._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "ParamScalar":
        return ParamScalar._raw({e: -q for e, q in self.terms.items()})

    def __sub__(self, other: Scalarish) -> "ParamScalar":
        other = _as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalarish) -> "ParamScalar":
        return (-self) + other

    def __mul__(self, other: Scalarish) -> "ParamScalar":
        if isinstance(other, (int, Fraction)):
            if not other:
                return ParamScalar._raw({})
            return ParamScalar._raw({e: q * other for e, q in self.terms.items()})
        other = _as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if len(other.terms) == 1 and () in other.terms:
            return self * other.terms[()]
        if len(self.terms) == 1 and () in self.terms:
            return other * self.terms[()]
        out: dict[tuple, Fraction] = {}
        for e1, q1 in self.terms.items():
            for e2, q2 in other.terms.items():
                e = _mono_mul(e1, e2)
                s = out.get(e, 0) + q1 * q2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return ParamScalar._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ParamScalar":
        if n < 0:
            raise ValueError("negative power of a ParamScalar")
        result = ParamScalar.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other: Number) -> "ParamScalar":
        # Only rational divisors; parameter division is deliberately unsupported.
        if isinstance(other, ParamScalar):
            other = other.constant_value()
        other = Fraction(other)
        return self * (1 / other)

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(): Fraction(other)} if other else {})
        if isinstance(other, ParamScalar):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- evaluation -------------------------------------------------------
    def specialize(self, values: Mapping[str, Number]) -> "ParamScalar":
        """Substitute rational values for some or all parameter symbols."""
        subs = {param_index(k): Fraction(v) for k, v in values.items()}
        out: dict[tuple, Fraction] = {}
        for e, q in self.terms.items():
            ne = list(e)
            for i, k in enumerate(e):
                if k and i in subs:
                    q = q * subs[i] ** k
                    ne[i] = 0
            key = _strip(tuple(ne))
            s = out.get(key, 0) + q
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return ParamScalar._raw(out)

    # -- display ----------------------------------------------------------
    def _sorted_terms(self):
        # Higher total degree first, then lexicographic on exponents.
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-k for k in t[0])))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, q in self._sorted_terms():
            mono = "*".join(
                param_name(i) if k == 1 else f"{param_name(i)}^{k}"
                for i, k in enumerate(e) if k
            )
            mag = abs(q)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if q < 0 else "+", body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"ParamScalar({self})"


def _as_scalar(value):
    if isinstance(value, ParamScalar):
        return value
    if isinstance(value, (int, Fraction)):
        return ParamScalar.const(value)
    return NotImplemented


ZERO = ParamScalar.const(0)
ONE = ParamScalar.const(1)
