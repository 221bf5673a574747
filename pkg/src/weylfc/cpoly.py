"""Sparse commutative polynomials over ParamScalar and their Groebner bases."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    ContextMismatch,
    NonHomogeneousInput,
    ParameterLeadingCoefficient,
    ZeroElement,
)
from .scalars import ONE, ParamScalar, Scalarish


def _format_scalar_factor(c: ParamScalar, has_mono: bool) -> tuple[str, str]:
    """Split a coefficient into (sign, text) for printing ``c*mono``."""
    if c.is_constant():
        q = c.constant_value()
        sign = "-" if q < 0 else "+"
        mag = abs(q)
        if has_mono and mag == 1:
            return sign, ""
        return sign, str(mag)
    text = str(c)
    if len(c.terms) == 1:
        if text.startswith("-"):
            return "-", text[1:]
        return "+", text
    return "+", f"({text})"


def format_terms(pieces: Iterable[tuple[ParamScalar, str]]) -> str:
    """Render ``[(coeff, monomial_text), ...]`` as a signed sum."""
    out = []
    for c, mono in pieces:
        sign, coeff = _format_scalar_factor(c, bool(mono))
        if coeff and mono:
            body = f"{coeff}*{mono}"
        else:
            body = coeff or mono or "1"
        out.append((sign, body))
    if not out:
        return "0"
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def format_monomial(names: Sequence[str], exps: Sequence[int]) -> str:
    return "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, exps) if k)


# ---------------------------------------------------------------------------
# Monomial orders
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonomialOrder:
    """Weight-matrix order refined by lex on a variable priority list.

    ``key(e1) > key(e2)`` iff ``x^e1`` is larger.  Weight rows may contain
    negative entries (useful for reverse-lex style refinements); callers are
    responsible for well-foundedness where Buchberger needs it.
    """

    weights: tuple[tuple[int, ...], ...]
    tiebreak: tuple[int, ...]
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    @property
    def nvars(self) -> int:
        return len(self.tiebreak)

    def key(self, exps: tuple) -> tuple:
        k = self._cache.get(exps)
        if k is None:
            k = tuple(sum(w * e for w, e in zip(row, exps)) for row in self.weights) + tuple(
                exps[i] for i in self.tiebreak
            )
            self._cache[exps] = k
        return k

    # constructors ---------------------------------------------------------
    @classmethod
    def lex(cls, n: int, priority: Sequence[int] | None = None) -> "MonomialOrder":
        return cls((), tuple(priority if priority is not None else range(n)))

    @classmethod
    def grlex(cls, n: int) -> "MonomialOrder":
        return cls(((1,) * n,), tuple(range(n)))

    @classmethod
    def degrevlex(cls, n: int, priority: Sequence[int] | None = None) -> "MonomialOrder":
        """Graded reverse lex; ``priority`` lists variables from largest to smallest."""
        prio = list(priority if priority is not None else range(n))
        rows = [(1,) * n]
        for v in reversed(prio[1:]):
            rows.append(tuple(-1 if i == v else 0 for i in range(n)))
        return cls(tuple(rows), tuple(prio))

    @classmethod
    def elimination(cls, n: int, eliminate: Sequence[int]) -> "MonomialOrder":
        """Block order: variables in ``eliminate`` dominate; degrevlex inside."""
        first = tuple(1 if i in eliminate else 0 for i in range(n))
        rest = MonomialOrder.degrevlex(n)
        return cls((first,) + rest.weights, rest.tiebreak)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class CPoly:
    """Commutative polynomial: exponent tuple -> ParamScalar, in a named context."""

    __slots__ = ("context", "terms")

    def __init__(self, context: Sequence[str], terms: Mapping[tuple, Scalarish] | None = None):
        self.context = tuple(context)
        n = len(self.context)
        clean: dict[tuple, ParamScalar] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n or any(k < 0 for k in e):
                raise ValueError(f"bad exponent tuple {e} for context {self.context}")
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
    def _raw(cls, context: tuple, terms: dict) -> "CPoly":
        obj = cls.__new__(cls)
        obj.context = context
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, context: Sequence[str]) -> "CPoly":
        return cls._raw(tuple(context), {})

    @classmethod
    def const(cls, context: Sequence[str], c: Scalarish) -> "CPoly":
        return cls(context, {(0,) * len(context): c})

    @classmethod
    def var(cls, context: Sequence[str], name: str) -> "CPoly":
        context = tuple(context)
        i = context.index(name)
        return cls._raw(context, {tuple(int(j == i) for j in range(len(context))): ONE})

    @classmethod
    def monomial(cls, context: Sequence[str], exps: Sequence[int], coeff: Scalarish = 1) -> "CPoly":
        return cls(context, {tuple(exps): coeff})

    # -- basic queries ----------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.context)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        w = weights or (1,) * self.nvars
        degs = {sum(a * b for a, b in zip(w, e)) for e in self.terms}
        return len(degs) <= 1

    def is_parameter_free(self) -> bool:
        return all(c.is_constant() for c in self.terms.values())

    def leading_term(self, order: MonomialOrder) -> tuple[tuple, ParamScalar]:
        if not self.terms:
            raise ZeroElement("leading term of the zero polynomial")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def leading_monomial(self, order: MonomialOrder) -> tuple:
        return self.leading_term(order)[0]

    def sorted_terms(self, order: MonomialOrder | None = None) -> list[tuple[tuple, ParamScalar]]:
        order = order or MonomialOrder.degrevlex(self.nvars)
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "CPoly") -> None:
        if self.context != other.context:
            raise ContextMismatch(f"{self.context} vs {other.context}")

    def _lift(self, other) -> "CPoly":
        if isinstance(other, CPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, ParamScalar)):
            return CPoly.const(self.context, other)
        return NotImplemented

    def __add__(self, other) -> "CPoly":
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
        return CPoly._raw(self.context, out)

    __radd__ = __add__

    def __neg__(self) -> "CPoly":
        return CPoly._raw(self.context, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "CPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "CPoly":
        return (-self) + other

    def __mul__(self, other) -> "CPoly":
        if isinstance(other, (int, Fraction, ParamScalar)):
            c = ParamScalar.coerce(other)
            if not c:
                return CPoly.zero(self.context)
            out = {}
            for e, v in self.terms.items():
                vc = v * c
                if vc:
                    out[e] = vc
            return CPoly._raw(self.context, out)
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple, ParamScalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out[e] + c if e in out else c
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return CPoly._raw(self.context, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CPoly":
        result = CPoly.const(self.context, 1)
        for _ in range(n):
            result = result * self
        return result

    def mul_term(self, exps: tuple, coeff: ParamScalar) -> "CPoly":
        return CPoly._raw(
            self.context,
            {tuple(a + b for a, b in zip(e, exps)): c * coeff for e, c in self.terms.items()},
        )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, ParamScalar)):
            other = CPoly.const(self.context, other)
        if not isinstance(other, CPoly):
            return NotImplemented
        return self.context == other.context and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.context, frozenset(self.terms.items())))

    # -- transformations ----------------------------------------------------
    def monic(self, order: MonomialOrder) -> "CPoly":
        _, lc = self.leading_term(order)
        return self * (1 / _rational_lc(lc))

    def specialize(self, values: Mapping[str, Fraction]) -> "CPoly":
        return CPoly(self.context, {e: c.specialize(values) for e, c in self.terms.items()})

    def evaluate(self, point: Mapping[str, Scalarish] | Sequence[Scalarish]) -> ParamScalar:
        """Substitute values for every variable; returns the coefficient-ring value."""
        if isinstance(point, Mapping):
            vals = [ParamScalar.coerce(point[name]) for name in self.context]
        else:
            vals = [ParamScalar.coerce(v) for v in point]
        total = ParamScalar.const(0)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t = t * v**k
            total = total + t
        return total

    def rename(self, context: Sequence[str]) -> "CPoly":
        if len(context) != self.nvars:
            raise ContextMismatch("rename must keep the number of variables")
        return CPoly._raw(tuple(context), dict(self.terms))

    def embed(self, context: Sequence[str]) -> "CPoly":
        """Re-express in a larger context that contains every current variable."""
        context = tuple(context)
        pos = [context.index(v) for v in self.context]
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(context)
            for p, k in zip(pos, e):
                ne[p] = k
            out[tuple(ne)] = c
        return CPoly._raw(context, out)

    def drop_variables(self, context: Sequence[str]) -> "CPoly":
        """Restrict to a sub-context; fails if a dropped variable occurs."""
        context = tuple(context)
        pos = [self.context.index(v) for v in context]
        keep = set(pos)
        out = {}
        for e, c in self.terms.items():
            if any(k for i, k in enumerate(e) if i not in keep):
                raise ValueError("polynomial involves a variable outside the target context")
            out[tuple(e[p] for p in pos)] = c
        return CPoly._raw(context, out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return format_terms(
            (c, format_monomial(self.context, e)) for e, c in self.sorted_terms()
        )

    def __repr__(self) -> str:
        return f"CPoly({self})"


# ---------------------------------------------------------------------------
# Division and Groebner bases
# ---------------------------------------------------------------------------


def _rational_lc(c: ParamScalar) -> Fraction:
    if not c.is_constant():
        raise ParameterLeadingCoefficient(f"leading coefficient {c} involves parameters")
    return c.constant_value()


def divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _same_context(polys: Sequence[CPoly]) -> tuple:
    ctxs = {p.context for p in polys}
    if len(ctxs) > 1:
        raise ContextMismatch(f"mixed contexts {sorted(ctxs)}")
    return next(iter(ctxs)) if ctxs else ()


def cpoly_divide(
    f: CPoly, G: Sequence[CPoly], order: MonomialOrder
) -> tuple[CPoly, list[CPoly]]:
    """Multivariate division: ``f = sum(q_i * G[i]) + r``.

    Always divides by the first generator (in list order) whose leading
    monomial divides the current leading monomial.  Returns ``(r, quotients)``.
    """
    _same_context([f, *G])
    lead = []
    for g in G:
        if not g:
            raise ZeroElement("division by the zero polynomial")
        e, c = g.leading_term(order)
        lead.append((e, 1 / _rational_lc(c)))
    ctx = f.context
    p = dict(f.terms)
    rem: dict[tuple, ParamScalar] = {}
    quots: list[dict] = [{} for _ in G]
    while p:
        e = max(p, key=order.key)
        c = p[e]
        for idx, (le, inv) in enumerate(lead):
            if divides(le, e):
                shift = _sub(e, le)
                factor = c * inv
                q = quots[idx]
                q[shift] = q[shift] + factor if shift in q else factor
                for ge, gc in G[idx].terms.items():
                    te = tuple(a + b for a, b in zip(ge, shift))
                    v = gc * factor
                    s = p[te] - v if te in p else -v
                    if s:
                        p[te] = s
                    else:
                        p.pop(te, None)
                break
        else:
            rem[e] = c
            del p[e]
    return CPoly._raw(ctx, rem), [CPoly(ctx, q) for q in quots]


def cpoly_normal_form(f: CPoly, G: Sequence[CPoly], order: MonomialOrder) -> CPoly:
    """Fully reduced remainder of ``f`` modulo ``G``."""
    return cpoly_divide(f, G, order)[0]


def s_polynomial(f: CPoly, g: CPoly, order: MonomialOrder) -> CPoly:
    ef, cf = f.leading_term(order)
    eg, cg = g.leading_term(order)
    lcm = _lcm(ef, eg)
    return f.mul_term(_sub(lcm, ef), cg) - g.mul_term(_sub(lcm, eg), cf)


def interreduce(G: Sequence[CPoly], order: MonomialOrder) -> list[CPoly]:
    """Reduced Groebner basis from a Groebner basis: minimal, tail-reduced, monic."""
    polys = [g.monic(order) for g in G if g]
    lms = [g.leading_monomial(order) for g in polys]
    keep = []
    for i, (g, e) in enumerate(zip(polys, lms)):
        redundant = False
        for j, e2 in enumerate(lms):
            if j == i:
                continue
            if divides(e2, e) and (e2 != e or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        e, c = g.leading_term(order)
        tail = CPoly._raw(g.context, {k: v for k, v in g.terms.items() if k != e})
        tail = cpoly_normal_form(tail, others, order) if others else tail
        out.append(tail + CPoly._raw(g.context, {e: c}))
    out.sort(key=lambda p: order.key(p.leading_monomial(order)), reverse=True)
    return out


def cpoly_buchberger(
    G: Sequence[CPoly], order: MonomialOrder, reduced: bool = True
) -> list[CPoly]:
    """Buchberger's algorithm with the product and chain criteria.

    Returns the reduced Groebner basis (monic, sorted by decreasing leading
    monomial) unless ``reduced`` is False.
    """
    ctx = _same_context(G)
    basis = [g.monic(order) for g in G if g]
    if not basis:
        return []
    lms = [b.leading_monomial(order) for b in basis]
    pending: set[tuple[int, int]] = set()
    heap: list = []

    def push(i: int, j: int) -> None:
        lcm = _lcm(lms[i], lms[j])
        pending.add((i, j))
        heapq.heappush(heap, (sum(lcm), order.key(lcm), i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        ei, ej = lms[i], lms[j]
        lcm = _lcm(ei, ej)
        if all(a == 0 or b == 0 for a, b in zip(ei, ej)):
            continue
        if any(
            k != i and k != j
            and divides(lms[k], lcm)
            and (min(i, k), max(i, k)) not in pending
            and (min(j, k), max(j, k)) not in pending
            for k in range(len(basis))
        ):
            continue
        r = cpoly_normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if r:
            r = r.monic(order)
            basis.append(r)
            lms.append(r.leading_monomial(order))
            new = len(basis) - 1
            for k in range(new):
                push(k, new)
    if reduced:
        return interreduce(basis, order)
    return basis


def is_groebner_basis(G: Sequence[CPoly], order: MonomialOrder) -> tuple[bool, list[tuple[int, int]]]:
    """Check Buchberger's criterion directly: every S-polynomial reduces to 0."""
    bad = []
    for j in range(len(G)):
        for i in range(j):
            if cpoly_normal_form(s_polynomial(G[i], G[j], order), G, order):
                bad.append((i, j))
    return not bad, bad


def ideal_contains(gb: Sequence[CPoly], f: CPoly, order: MonomialOrder) -> bool:
    """Membership test; ``gb`` must be a Groebner basis for ``order``."""
    return not cpoly_normal_form(f, gb, order)


def ideals_equal(F: Sequence[CPoly], G: Sequence[CPoly], order: MonomialOrder) -> bool:
    """Equality by mutual reduction against each side's Groebner basis."""
    gb_f = cpoly_buchberger(F, order)
    gb_g = cpoly_buchberger(G, order)
    return all(ideal_contains(gb_g, f, order) for f in F) and all(
        ideal_contains(gb_f, g, order) for g in G
    )


def saturate_by_variable(G: Sequence[CPoly], var: int) -> list[CPoly]:
    """Compute ``<G> : x_var^oo`` for a homogeneous ideal.

    Uses a degree reverse-lex order in which ``x_var`` is the smallest
    variable: dividing each basis element by its largest power of ``x_var``
    yields a basis of the saturation.
    """
    if not all(g.is_homogeneous() for g in G):
        raise NonHomogeneousInput("variable saturation needs homogeneous generators")
    ctx = _same_context(G)
    n = len(ctx)
    prio = [i for i in range(n) if i != var] + [var]
    order = MonomialOrder.degrevlex(n, prio)
    gb = cpoly_buchberger(G, order)
    out = []
    for g in gb:
        k = min(e[var] for e in g.terms)
        if k:
            shift = tuple(k if i == var else 0 for i in range(n))
            g = CPoly._raw(ctx, {_sub(e, shift): c for e, c in g.terms.items()})
        out.append(g)
    return out


def saturate(G: Sequence[CPoly], f: CPoly, order: MonomialOrder | None = None) -> list[CPoly]:
    """``<G> : f^oo`` via elimination of t from ``<G, 1 - t*f>``."""
    ctx = _same_context([*G, f])
    n = len(ctx)
    tname = "_sat_t"
    big = ctx + (tname,)
    lifted = [g.embed(big) for g in G]
    t = CPoly.var(big, tname)
    lifted.append(CPoly.const(big, 1) - t * f.embed(big))
    elim = MonomialOrder.elimination(n + 1, [n])
    gb = cpoly_buchberger(lifted, elim)
    kept = [g.drop_variables(ctx) for g in gb if all(e[n] == 0 for e in g.terms)]
    order = order or MonomialOrder.degrevlex(n)
    return cpoly_buchberger(kept, order)
