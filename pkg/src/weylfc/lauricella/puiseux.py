"""Finite sums of half-integer power monomials, and the action of D on them."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from ..errors import UnspecializedParameter
from ..report import Check
from ..scalars import Scalarish, ParamScalar
from ..weyl import WeylElement
from .operators import ParamSet, ell

HALF = Fraction(1, 2)


def _half(v) -> Fraction:
    q = Fraction(v)
    if (2 * q).denominator != 1:
        raise ValueError(f"exponent {q} is not a half-integer")
    return q


class PuiseuxFn:
    """``sum coeff * prod x_i^(k_i/2)`` with rational coefficients."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: Mapping[Sequence, Scalarish] | None = None):
        self.m = m
        clean: dict[tuple, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(_half(v) for v in e)
            if len(e) != m:
                raise ValueError(f"exponent {e} needs {m} entries")
            c = Fraction(c)
            if c:
                s = clean.get(e, Fraction(0)) + c
                if s:
                    clean[e] = s
                else:
                    clean.pop(e, None)
        self.terms = clean

    @classmethod
    def monomial(cls, m: int, exps: Sequence, coeff: Scalarish = 1) -> "PuiseuxFn":
        return cls(m, {tuple(exps): coeff})

    @classmethod
    def const(cls, m: int, c: Scalarish) -> "PuiseuxFn":
        return cls(m, {(0,) * m: c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "PuiseuxFn") -> "PuiseuxFn":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return PuiseuxFn(self.m, out)

    def __neg__(self) -> "PuiseuxFn":
        return PuiseuxFn(self.m, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "PuiseuxFn") -> "PuiseuxFn":
        return self + (-other)

    def __mul__(self, other) -> "PuiseuxFn":
        if isinstance(other, PuiseuxFn):
            out: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    out[e] = out.get(e, Fraction(0)) + c1 * c2
            return PuiseuxFn(self.m, out)
        c = Fraction(other)
        return PuiseuxFn(self.m, {e: v * c for e, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PuiseuxFn):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.m, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-v for v in e))):
            c = self.terms[e]
            mono = "*".join(_power(i, k) for i, k in enumerate(e, start=1) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"PuiseuxFn({self})"


def _power(i: int, k: Fraction) -> str:
    if k == 1:
        return f"x{i}"
    return f"x{i}^{k}" if k.denominator == 1 and k > 0 else f"x{i}^({k})"


def _rational(c: ParamScalar) -> Fraction:
    if not c.is_constant():
        raise UnspecializedParameter(f"coefficient {c} still involves parameters")
    return c.constant_value()


def apply_to_puiseux(p: WeylElement, f: PuiseuxFn) -> PuiseuxFn:
    """Apply a plain-D operator with rational coefficients to f."""
    if p.ctx.homogenized:
        raise ValueError("apply_to_puiseux needs a plain Weyl algebra element")
    n = p.ctx.n
    if f.m != n:
        raise ValueError(f"function has {f.m} variables, operator has {n}")
    out: dict[tuple, Fraction] = {}
    for e, c in p.terms.items():
        q = _rational(c)
        alpha, beta = e[:n], e[n:2 * n]
        for fe, fc in f.terms.items():
            coeff = q * fc
            for k, b in zip(fe, beta):
                for s in range(b):
                    coeff *= k - s
            if coeff:
                ne = tuple(k - b + a for k, a, b in zip(fe, alpha, beta))
                out[ne] = out.get(ne, Fraction(0)) + coeff
    return PuiseuxFn(n, out)


EXAMPLE_PARAMS = {"a": Fraction(-1, 2), "b": Fraction(-2), "c": (HALF, HALF)}


def example_params() -> ParamSet:
    return ParamSet.rational(2, EXAMPLE_PARAMS["a"], EXAMPLE_PARAMS["b"], EXAMPLE_PARAMS["c"])


def example_functions() -> dict[str, PuiseuxFn]:
    """The four listed solutions at a=-1/2, b=-2, c1=c2=1/2 (x = x1, y = x2)."""
    third = Fraction(1, 3)
    poly = PuiseuxFn(2, {
        (0, 0): 1, (1, 0): 2, (0, 1): 2, (1, 1): -2, (2, 0): -third, (0, 2): -third,
    })
    sqrt_xy = PuiseuxFn(2, {(HALF, HALF): 1, (Fraction(3, 2), HALF): -third, (HALF, Fraction(3, 2)): -third})
    return {
        "1+2x+2y-2xy-x^2/3-y^2/3": poly,
        "sqrt(x)": PuiseuxFn.monomial(2, (HALF, 0)),
        "sqrt(y)": PuiseuxFn.monomial(2, (0, HALF)),
        "sqrt(xy)(1-x/3-y/3)": sqrt_xy,
    }


def negative_control_function() -> PuiseuxFn:
    return PuiseuxFn(2, {(0, 0): 1, (1, 0): 1})


def check_example_solutions(include_control: bool = True) -> list[Check]:
    """One check per (function, operator); the control ``1+x`` is expected to
    survive, so its check passes when it is not annihilated."""
    P = example_params()
    ops = {f"l{i}": ell(P, i) for i in (1, 2)}
    checks = []
    for name, f in example_functions().items():
        for op_name, op in ops.items():
            r = apply_to_puiseux(op, f)
            detail = {"result": str(r)}
            checks.append(Check(f"{op_name}({name}) == 0", not r, detail))
    if include_control:
        r = apply_to_puiseux(ops["l1"], negative_control_function())
        checks.append(Check("l1(1+x) != 0 (control)", bool(r), {"result": str(r)}))
    return checks
