"""Orders, initial forms, S-pairs, left division and Buchberger in D and D^(h)."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cpoly import CPoly
from .errors import (
    ContextMismatch,
    InvalidOrder,
    NegativeWeightSum,
    NonHomogeneousInput,
    ParameterLeadingCoefficient,
    ZeroElement,
)
from .scalars import ParamScalar
from .weyl import WeylContext, WeylElement, weyl_mul


@dataclass(frozen=True)
class WeylOrder:
    """Weight vectors on (x, d) refined by lex on an explicit coordinate list.

    Coordinates are numbered ``0..n-1`` for x_1..x_n and ``n..2n-1`` for
    d_1..d_n.  The homogenizing variable h is compared last, after every
    listed coordinate; for homogeneous elements of equal degree that
    comparison is never decisive.
    """

    n: int
    weights: tuple[tuple[int, ...], ...]
    tiebreak: tuple[int, ...]
    name: str = "custom"
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        for w in self.weights:
            if len(w) != 2 * self.n:
                raise InvalidOrder("weight vectors must have length 2n")
        if sorted(self.tiebreak) != list(range(2 * self.n)):
            raise InvalidOrder("tie-break must list every x and d coordinate once")

    def key(self, e: tuple) -> tuple:
        k = self._cache.get(e)
        if k is None:
            k = (
                tuple(sum(w * v for w, v in zip(row, e)) for row in self.weights)
                + tuple(e[i] for i in self.tiebreak)
                + (e[-1],)
            )
            self._cache[e] = k
        return k

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for row in self.weights for v in row)

    @classmethod
    def w(cls, n: int) -> "WeylOrder":
        """First weight (0,1), second weight (1,0), then lex with x_1 highest."""
        return cls(
            n,
            ((0,) * n + (1,) * n, (1,) * n + (0,) * n),
            tuple(range(2 * n)),
            "w",
        )

    @classmethod
    def km(cls, n: int) -> "WeylOrder":
        """Weight (-1,...,-1,1,...,1) with tie-break d_1 > ... > d_n > x_1 > ... > x_n."""
        return cls(
            n,
            ((-1,) * n + (1,) * n,),
            tuple(range(n, 2 * n)) + tuple(range(n)),
            "km",
        )

    @classmethod
    def lex(cls, n: int) -> "WeylOrder":
        """Pure lex with d_1 > ... > d_n > x_1 > ... > x_n."""
        return cls(n, (), tuple(range(n, 2 * n)) + tuple(range(n)), "lex")

    @classmethod
    def by_name(cls, name: str, n: int) -> "WeylOrder":
        try:
            return {"w": cls.w, "km": cls.km, "lex": cls.lex}[name](n)
        except KeyError:
            raise InvalidOrder(f"unknown order {name!r}") from None


# ---------------------------------------------------------------------------
# Initial forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InitialForm:
    form: CPoly | WeylElement
    order_value: int


def weight_order(p: WeylElement, u: Sequence[int], v: Sequence[int]) -> int:
    """``ord_(u,v)(p) = max(alpha.u + beta.v)`` over the support of p."""
    if not p:
        raise ZeroElement("ord of the zero operator")
    n = p.ctx.n
    return max(
        sum(a * b for a, b in zip(u, e[:n])) + sum(a * b for a, b in zip(v, e[n:2 * n]))
        for e in p.terms
    )


def initial_form(p: WeylElement, u: Sequence[int], v: Sequence[int]) -> InitialForm:
    """(u,v)-initial form of a plain Weyl element.

    With every ``u_i + v_i > 0`` the result is a commutative polynomial in
    (x, xi); with every ``u_i + v_i == 0`` it stays in the Weyl algebra.
    """
    if p.ctx.homogenized:
        raise ContextMismatch("initial forms are taken in the plain Weyl algebra")
    if not p:
        raise ZeroElement("initial form of the zero operator")
    n = p.ctx.n
    if len(u) != n or len(v) != n:
        raise ValueError("weight vectors must have length n")
    sums = [a + b for a, b in zip(u, v)]
    if any(s < 0 for s in sums):
        raise NegativeWeightSum(f"u + v = {sums} has a negative entry")
    top = weight_order(p, u, v)

    def wt(e):
        return sum(a * b for a, b in zip(u, e[:n])) + sum(a * b for a, b in zip(v, e[n:2 * n]))

    top_terms = {e: c for e, c in p.terms.items() if wt(e) == top}
    if all(s > 0 for s in sums):
        form = CPoly(p.ctx.symbol_context(), {e[:2 * n]: c for e, c in top_terms.items()})
    elif all(s == 0 for s in sums):
        form = WeylElement(p.ctx, top_terms)
    else:
        raise NotImplementedError("mixed u_i + v_i signs are not supported")
    return InitialForm(form, top)


def principal_symbol(p: WeylElement) -> CPoly:
    n = p.ctx.n
    return initial_form(p, (0,) * n, (1,) * n).form


# ---------------------------------------------------------------------------
# Leading terms, S-pairs, division
# ---------------------------------------------------------------------------


def _check_order(p: WeylElement, order: WeylOrder) -> None:
    if order.n != p.ctx.n:
        raise ContextMismatch(f"order for n={order.n} used with n={p.ctx.n}")


def leading_monomial(p: WeylElement, order: WeylOrder) -> tuple[tuple, ParamScalar]:
    """``(exponents, coefficient)`` of the order-maximal term."""
    if not p:
        raise ZeroElement("leading monomial of the zero operator")
    _check_order(p, order)
    e = max(p.terms, key=order.key)
    return e, p.terms[e]


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _left_mul_monomial(e: tuple, coeff: ParamScalar, g: WeylElement) -> WeylElement:
    return weyl_mul(WeylElement._raw(g.ctx, {e: coeff}), g)


def weyl_spair(f: WeylElement, g: WeylElement, order: WeylOrder) -> WeylElement:
    """``lc(g) * m_f * f - lc(f) * m_g * g`` with ``m_f, m_g`` completing the lcm."""
    if f.ctx != g.ctx:
        raise ContextMismatch(f"{f.ctx} vs {g.ctx}")
    ef, cf = leading_monomial(f, order)
    eg, cg = leading_monomial(g, order)
    lcm = _lcm(ef, eg)
    return _left_mul_monomial(_sub(lcm, ef), cg, f) - _left_mul_monomial(_sub(lcm, eg), cf, g)


def _rational(c: ParamScalar) -> Fraction:
    if not c.is_constant():
        raise ParameterLeadingCoefficient(f"leading coefficient {c} involves parameters")
    return c.constant_value()


def weyl_normal_form(
    f: WeylElement, G: Sequence[WeylElement], order: WeylOrder
) -> tuple[WeylElement, list[WeylElement]]:
    """Left division ``f = sum(q_i * G[i]) + r`` with a fully reduced remainder.

    The first generator (in list order) whose leading monomial divides the
    current leading monomial is used, which keeps certificates reproducible.
    """
    _check_order(f, order)
    leads = []
    for g in G:
        if g.ctx != f.ctx:
            raise ContextMismatch(f"{g.ctx} vs {f.ctx}")
        e, c = leading_monomial(g, order)
        leads.append((e, 1 / _rational(c)))
    ctx = f.ctx
    p = dict(f.terms)
    rem: dict[tuple, ParamScalar] = {}
    quots: list[dict] = [{} for _ in G]
    while p:
        e = max(p, key=order.key)
        c = p[e]
        for idx, (le, inv) in enumerate(leads):
            if _divides(le, e):
                shift = _sub(e, le)
                factor = c * inv
                q = quots[idx]
                q[shift] = q[shift] + factor if shift in q else factor
                for te, tc in _left_mul_monomial(shift, factor, G[idx]).terms.items():
                    s = p[te] - tc if te in p else -tc
                    if s:
                        p[te] = s
                    else:
                        p.pop(te, None)
                if e in p:
                    raise InvalidOrder("leading term did not cancel; order is not multiplicative")
                break
        else:
            rem[e] = c
            del p[e]
    return WeylElement._raw(ctx, rem), [WeylElement(ctx, q) for q in quots]


def _validate_for_buchberger(G: Sequence[WeylElement], order: WeylOrder) -> WeylContext:
    ctxs = {g.ctx for g in G}
    if len(ctxs) != 1:
        raise ContextMismatch(f"mixed contexts {ctxs}")
    ctx = ctxs.pop()
    if order.n != ctx.n:
        raise ContextMismatch(f"order for n={order.n} used with n={ctx.n}")
    if ctx.homogenized:
        for g in G:
            if not g.is_homogeneous():
                raise NonHomogeneousInput(f"non-homogeneous generator {g}")
    elif not order.is_nonnegative():
        raise InvalidOrder(
            f"order {order.name!r} has negative weights; use it in the homogenized algebra"
        )
    return ctx


def weyl_buchberger(G: Sequence[WeylElement], order: WeylOrder) -> list[WeylElement]:
    """Left Groebner basis: the input generators followed by any new elements.

    Pairs are taken smallest lcm first (ties by insertion).  The chain
    criterion skips (i, j) when some lead k divides lcm(i, j) and both (i, k)
    and (j, k) are already done; it stays valid in the Weyl algebra, the
    product criterion does not and is not used.  New elements are made monic
    and appended, so on a Groebner basis the result is the input list itself.
    """
    G = [g for g in G if g]
    if not G:
        return []
    _validate_for_buchberger(G, order)
    basis = list(G)
    leads = [leading_monomial(g, order)[0] for g in basis]
    for g in basis:
        _rational(leading_monomial(g, order)[1])
    heap: list = []
    counter = 0

    def push(i: int, j: int) -> None:
        nonlocal counter
        lcm = _lcm(leads[i], leads[j])
        heapq.heappush(heap, (order.key(lcm), counter, i, j))
        counter += 1

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)
    done: set[tuple[int, int]] = set()
    while heap:
        _, _, i, j = heapq.heappop(heap)
        done.add((i, j))
        lcm = _lcm(leads[i], leads[j])
        if any(
            k != i and k != j
            and _divides(leads[k], lcm)
            and (min(i, k), max(i, k)) in done
            and (min(j, k), max(j, k)) in done
            for k in range(len(basis))
        ):
            continue
        r, _ = weyl_normal_form(weyl_spair(basis[i], basis[j], order), basis, order)
        if r:
            e, lc = leading_monomial(r, order)
            basis.append(r.scale(1 / _rational(lc)))
            leads.append(e)
            new = len(basis) - 1
            for k in range(new):
                push(k, new)
    return basis


def is_weyl_groebner(
    G: Sequence[WeylElement], order: WeylOrder
) -> tuple[bool, list[tuple[int, int]]]:
    """Buchberger's criterion: every S-pair of G reduces to zero modulo G."""
    bad = []
    for j in range(len(G)):
        for i in range(j):
            r, _ = weyl_normal_form(weyl_spair(G[i], G[j], order), G, order)
            if r:
                bad.append((i, j))
    return not bad, bad


# ---------------------------------------------------------------------------
# Standard representations
# ---------------------------------------------------------------------------


@dataclass
class StandardRep:
    """Outcome of a standard-representation check.

    ``identity`` says whether ``f == sum(c_i * g_i)`` holds exactly;
    ``failing_index`` is the first term whose leading monomial exceeds in(f).
    ``difference`` holds ``f - sum(c_i * g_i)`` when the identity fails.
    """

    ok: bool
    identity: bool
    failing_index: int | None = None
    difference: WeylElement | None = None
    leading: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def check_standard_rep(
    f: WeylElement,
    terms: Sequence[tuple[WeylElement, WeylElement]],
    order: WeylOrder,
) -> StandardRep:
    """Certify ``f = sum(cofactor_i * generator_i)`` with ``in(c_i g_i) <= in(f)``."""
    products = [weyl_mul(c, g) for c, g in terms]
    total = WeylElement.zero(f.ctx)
    for p in products:
        total = total + p
    diff = f - total
    leading = [leading_monomial(p, order)[0] if p else None for p in products]
    if diff:
        return StandardRep(False, False, None, diff, leading)
    if not f:
        bad = next((i for i, p in enumerate(products) if p), None)
        return StandardRep(bad is None, True, bad, None, leading)
    top = order.key(leading_monomial(f, order)[0])
    for i, e in enumerate(leading):
        if e is not None and order.key(e) > top:
            return StandardRep(False, True, i, None, leading)
    return StandardRep(True, True, None, None, leading)
