"""Exact operator identities: the y-chart commutation relation, the S-pair
standard representations for {T_i, T_ij}, and the syzygies they induce."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from ..report import Check
from ..weyl import WeylElement, dehomogenize, left_quotient_by_var, theta_total
from ..weyl_gb import WeylOrder, check_standard_rep, leading_monomial, weyl_normal_form, weyl_spair
from .operators import (
    ParamSet,
    S,
    S_ab,
    T,
    T_pair,
    ell,
    ell_ij,
    ell_prime,
    groebner_family_T,
    h_context,
    x_context,
    y_context,
)

Label = tuple  # ("T", i) or ("T", i, j)


def first_difference(diff: WeylElement) -> str:
    """Display text of the largest differing term (for failure reports)."""
    if not diff:
        return ""
    e, c = diff.sorted_terms()[0]
    return str(WeylElement._raw(diff.ctx, {e: c}))


# ---------------------------------------------------------------------------
# Commutation relation in the y-chart
# ---------------------------------------------------------------------------


COMMUTATION_FORMS = ("stated", "corrected")


def verify_commutation(
    m: int,
    i: int,
    j: int,
    P: ParamSet | None = None,
    drop_one: bool = False,
    form: str = "stated",
) -> Check:
    """Check a closed form for ``l'_i l'_j - l'_j l'_i``.

    ``form="stated"`` tests ``-(2 theta - a - b + 1)(l'_i - l'_j)``;
    ``form="corrected"`` tests ``(l'_i - l'_j)(2 theta - a - b + 1)``, which
    equals ``(2 theta - a - b - 1)(l'_i - l'_j)``.  ``drop_one`` removes the
    ``+1`` from the factor (negative control).
    """
    if i == j:
        raise ValueError("commutation relation needs i != j")
    if form not in COMMUTATION_FORMS:
        raise ValueError(f"unknown form {form!r}; choose from {COMMUTATION_FORMS}")
    P = P or ParamSet.symbolic(m)
    ctx = y_context(m)
    li, lj = ell_prime(P, i), ell_prime(P, j)
    lhs = li * lj - lj * li
    factor = theta_total(ctx) * 2 - P.a - P.b + (0 if drop_one else 1)
    rhs = -(factor * (li - lj)) if form == "stated" else (li - lj) * factor
    diff = lhs - rhs
    detail = {"m": m, "i": i, "j": j, "form": form}
    if diff:
        detail["first_difference"] = first_difference(diff)
    suffix = "" if form == "stated" else f",{form}"
    return Check(f"commutation[m={m},i={i},j={j}{suffix}]", not diff, detail)


def y_standard_rep(P: ParamSet, i: int, j: int, shift: int = 1) -> Check:
    """``sp(l'_i, l'_j) = {y_j^3 d_j^2 - l'_j - X} l'_i - {y_i^3 d_i^2 - l'_i - X} l'_j``
    with ``X = 2 theta - a - b + shift``, certified under the order w.

    ``shift=1`` is the stated constant; the identity actually holds with
    ``shift=-1``.
    """
    if i == j:
        raise ValueError("needs i != j")
    ctx = y_context(P.m)
    order = WeylOrder.w(P.m)
    li, lj = ell_prime(P, i), ell_prime(P, j)
    X = theta_total(ctx) * 2 - P.a - P.b + shift
    y, d = WeylElement.x, WeylElement.d
    ci = y(ctx, j) ** 3 * d(ctx, j) ** 2 - lj - X
    cj = -(y(ctx, i) ** 3 * d(ctx, i) ** 2 - li - X)
    f = weyl_spair(li, lj, order)
    rep = check_standard_rep(f, [(ci, li), (cj, lj)], order)
    detail = {"m": P.m, "i": i, "j": j, "shift": shift, "identity": rep.identity, "in_f": _mono_text(f, order)}
    if not rep.identity:
        detail["first_difference"] = first_difference(rep.difference)
    elif rep.failing_index is not None:
        detail["failing_index"] = rep.failing_index
    return Check(f"sp(l'_i,l'_j)[m={P.m},i={i},j={j},shift={shift}]", rep.ok, detail)


# ---------------------------------------------------------------------------
# S-pair standard representations in D^(h)
# ---------------------------------------------------------------------------


@dataclass
class SpairCase:
    """One displayed identity ``sum(lhs) == sum(rhs)``; both sides are
    lists of ``(cofactor, generator_label)``."""

    kind: str
    indices: tuple
    pair: tuple[Label, Label]
    lhs: list[tuple[WeylElement, Label]]
    rhs: list[tuple[WeylElement, Label]]

    @property
    def name(self) -> str:
        return f"sp{self.kind}{self.indices}"


def generator(P: ParamSet, label: Label) -> WeylElement:
    if len(label) == 2:
        return T(P, label[1])
    return T_pair(P, label[1], label[2])


def _ops(P: ParamSet):
    ctx = h_context(P.m)
    x = lambda i: WeylElement.x(ctx, i)  # noqa: E731
    d = lambda i: WeylElement.d(ctx, i)  # noqa: E731
    th = lambda i: WeylElement.theta(ctx, i)  # noqa: E731
    return ctx, x, d, th, WeylElement.h(ctx)


def _case_ti_tj(P, i, j):
    return SpairCase(
        "(T_i,T_j)", (i, j), (("T", i), ("T", j)),
        [(S(P, j), ("T", i)), (-S(P, i), ("T", j))],
        [(S_ab(P, -1, -1), ("T", i, j))],
    )


def _case_ti_tij(P, i, j):
    ctx, x, d, th, h = _ops(P)
    return SpairCase(
        "(T_i,T_ij)", (i, j), (("T", i), ("T", i, j)),
        [(x(j), ("T", i)), (-h, ("T", i, j))],
        [(x(i), ("T", j))],
    )


def _case_tj_tij(P, i, j, completed: bool = False):
    """``completed`` adds the ``(c_j h^3 d_j - S_{a-1,b-1}) T_ij`` term that the
    stated right side lacks."""
    ctx, x, d, th, h = _ops(P)
    ci, cj = P.c[i - 1], P.c[j - 1]
    sj_over_xj = left_quotient_by_var(S(P, j), j)
    rhs = [
        (x(i) * sj_over_xj - h**2 * th(i) * ci, ("T", j)),
        (-(h**2 * th(j) * 2 + h**4 * cj), ("T", i)),
    ]
    if completed:
        rhs.append((h**3 * d(j) * cj - S_ab(P, -1, -1), ("T", i, j)))
    return SpairCase(
        "(T_j,T_ij)", (i, j), (("T", j), ("T", i, j)),
        [(x(i) ** 2 * d(i) ** 2, ("T", j)), (-(h * x(j) * d(j) ** 2), ("T", i, j))],
        rhs,
    )


def _case_tk_tij(P, i, j, k, h3: int = 3):
    ctx, x, d, th, h = _ops(P)
    ci, ck = P.c[i - 1], P.c[k - 1]
    return SpairCase(
        "(T_k,T_ij)", (i, j, k), (("T", k), ("T", i, j)),
        [(x(i) ** 2 * x(j) * d(i) ** 2, ("T", k)), (-(h * x(k) ** 2 * d(k) ** 2), ("T", i, j))],
        [
            (h * S(P, j), ("T", k, i)),
            (x(k) * S(P, i), ("T", j)),
            (-(h**2 * x(j) * th(i) * ci), ("T", k)),
            (h**h3 * th(k) * ck, ("T", i, j)),
        ],
    )


def _case_tij_tik(P, i, j, k):
    ctx, x, d, th, h = _ops(P)
    return SpairCase(
        "(T_ij,T_ik)", (i, j, k), (("T", i, j), ("T", i, k)),
        [(x(k), ("T", i, j)), (-x(j), ("T", i, k))],
        [(-x(i), ("T", j, k))],
    )


def _case_tij_tkj(P, i, j, k):
    ctx, x, d, th, h = _ops(P)
    ci, ck = P.c[i - 1], P.c[k - 1]
    return SpairCase(
        "(T_ij,T_kj)", (i, j, k), (("T", i, j), ("T", k, j)),
        [(x(k) ** 2 * d(k) ** 2, ("T", i, j)), (-(x(i) ** 2 * d(i) ** 2), ("T", k, j))],
        [
            (S(P, j), ("T", i, k)),
            (-(h**2 * th(k) * ck), ("T", i, j)),
            (h**2 * th(i) * ci, ("T", k, j)),
        ],
    )


def _case_tij_tjk(P, i, j, k):
    ctx, x, d, th, h = _ops(P)
    ci, cj = P.c[i - 1], P.c[j - 1]
    return SpairCase(
        "(T_ij,T_jk)", (i, j, k), (("T", i, j), ("T", j, k)),
        [(x(j) * x(k) * d(j) ** 2, ("T", i, j)), (-(x(i) ** 2 * d(i) ** 2), ("T", j, k))],
        [
            (S(P, k) + h**2 * x(k) * d(j) * (2 - cj), ("T", i, j)),
            (h**4 * (cj - 2), ("T", i, k)),
            (h**2 * x(i) * d(j) * (2 - cj) + h**2 * th(i) * ci - x(i) * th(j) * d(j), ("T", j, k)),
        ],
    )


def _case_disjoint(P, i, j, i2, j2):
    ctx, x, d, th, h = _ops(P)
    ci, ci2 = P.c[i - 1], P.c[i2 - 1]
    return SpairCase(
        "(T_ij,T_i'j')", (i, j, i2, j2), (("T", i, j), ("T", i2, j2)),
        [
            (x(i2) ** 2 * x(j2) * d(i2) ** 2, ("T", i, j)),
            (-(x(i) ** 2 * x(j) * d(i) ** 2), ("T", i2, j2)),
        ],
        [
            (x(j2) * S(P, j), ("T", i, i2)),
            (-(x(i2) * S(P, i)), ("T", j, j2)),
            (-(h**2 * x(j2) * th(i2) * ci2), ("T", i, j)),
            (h**2 * x(j) * th(i) * ci, ("T", i2, j2)),
        ],
    )


def spair_cases(P: ParamSet, completed: bool = False) -> list[SpairCase]:
    """One displayed identity for every unordered pair of generators in G."""
    m = P.m
    labels: list[Label] = [("T", i) for i in range(1, m + 1)]
    labels += [("T", i, j) for i, j in combinations(range(1, m + 1), 2)]
    cases = []
    for g1, g2 in combinations(labels, 2):
        if len(g1) == 2 and len(g2) == 2:
            cases.append(_case_ti_tj(P, g1[1], g2[1]))
        elif len(g1) == 2:
            k, (_, i, j) = g1[1], g2
            if k == i:
                cases.append(_case_ti_tij(P, i, j))
            elif k == j:
                cases.append(_case_tj_tij(P, i, j, completed))
            else:
                cases.append(_case_tk_tij(P, i, j, k))
        else:
            (_, i, j), (_, k, l) = g1, g2
            if i == k:
                cases.append(_case_tij_tik(P, i, j, l))
            elif j == l:
                cases.append(_case_tij_tkj(P, i, j, k))
            elif j == k:
                cases.append(_case_tij_tjk(P, i, j, l))
            else:
                cases.append(_case_disjoint(P, i, j, k, l))
    return cases


def _combine(P: ParamSet, terms, gens: dict) -> WeylElement:
    total = WeylElement.zero(h_context(P.m))
    for c, label in terms:
        if label not in gens:
            gens[label] = generator(P, label)
        total = total + c * gens[label]
    return total


def check_spair_case(P: ParamSet, case: SpairCase, order: WeylOrder | None = None) -> Check:
    """Exact identity plus the standard-representation condition under the order."""
    order = order or WeylOrder.km(P.m)
    gens: dict = {}
    lhs = _combine(P, case.lhs, gens)
    rhs_terms = [(c, gens.get(lab) or generator(P, lab)) for c, lab in case.rhs]
    rep = check_standard_rep(lhs, rhs_terms, order)
    g1, g2 = (generator(P, lab) for lab in case.pair)
    detail = {
        "identity": rep.identity,
        "standard": rep.ok,
        "matches_spair_definition": lhs == weyl_spair(g1, g2, order),
        "division_certificate": division_certificate(P, lhs, order),
    }
    if lhs:
        detail["in_f"] = _mono_text(lhs, order)
    if not rep.identity:
        detail["first_difference"] = first_difference(rep.difference)
    elif rep.failing_index is not None:
        detail["failing_index"] = rep.failing_index
    return Check(case.name, rep.ok, detail)


def division_certificate(P: ParamSet, f: WeylElement, order: WeylOrder) -> bool:
    """Divide f by G; a zero remainder yields a standard representation."""
    G = groebner_family_T(P)
    r, quots = weyl_normal_form(f, G, order)
    return not r and check_standard_rep(f, list(zip(quots, G)), order).ok


def _mono_text(p: WeylElement, order: WeylOrder) -> str:
    e, c = leading_monomial(p, order)
    return str(WeylElement._raw(p.ctx, {e: c}))


def verify_spair_suite(m: int, P: ParamSet | None = None, completed: bool = False) -> list[Check]:
    """Check every S-pair identity for G = {T_i, T_ij} at dimension m.

    ``completed`` swaps in the completed right side for the (T_j, T_ij) case.
    """
    P = P or ParamSet.symbolic(m)
    return [check_spair_case(P, case) for case in spair_cases(P, completed)]


def spair_negative_control(m: int = 3, P: ParamSet | None = None) -> Check:
    """The (T_k, T_ij) identity with ``c_k h^3 theta_k`` replaced by ``c_k h^2 theta_k``."""
    if m < 3:
        raise ValueError("the (T_k, T_ij) case needs m >= 3")
    P = P or ParamSet.symbolic(m)
    return check_spair_case(P, _case_tk_tij(P, 1, 2, 3, h3=2))


# ---------------------------------------------------------------------------
# Syzygies among ell_i, ell_ij
# ---------------------------------------------------------------------------


def _plain_generator(P: ParamSet, label: Label) -> WeylElement:
    if len(label) == 2:
        return ell(P, label[1])
    return ell_ij(P, label[1], label[2])


def syzygy_from_case(P: ParamSet, case: SpairCase) -> Check:
    """Dehomogenize ``sum(lhs) - sum(rhs)`` termwise; the result must vanish in D."""
    ctx = x_context(P.m)
    total = WeylElement.zero(ctx)
    consistent = True
    for sign, terms in ((1, case.lhs), (-1, case.rhs)):
        for c, label in terms:
            g = _plain_generator(P, label)
            consistent &= dehomogenize(generator(P, label)) == g
            total = total + dehomogenize(c) * g * sign
    detail = {"dehomogenized_generators_match": consistent}
    if total:
        detail["first_difference"] = first_difference(total)
    return Check(f"syzygy{case.kind}{case.indices}", consistent and not total, detail)


def verify_syzygy_displays(m: int, P: ParamSet | None = None, flip_last: bool = False) -> list[Check]:
    """The two displayed syzygies, for every ``i < j``.

    ``x_j l_i - l_ij - x_i l_j = 0`` and
    ``(th_j(th_j-1)+c_j th_j) l_i - (th_i(th_i-1)+c_i th_i) l_j - (th+a-1)(th+b-1) l_ij = 0``.
    ``flip_last`` flips the sign of the last term in each (negative control).
    """
    P = P or ParamSet.symbolic(m)
    ctx = x_context(m)
    th = theta_total(ctx)
    s = -1 if flip_last else 1
    checks = []
    for i, j in combinations(range(1, m + 1), 2):
        li, lj, lij = ell(P, i), ell(P, j), ell_ij(P, i, j)
        xi, xj = WeylElement.x(ctx, i), WeylElement.x(ctx, j)
        first = xj * li - lij - s * (xi * lj)
        ti, tj = WeylElement.theta(ctx, i), WeylElement.theta(ctx, j)
        qi = ti * (ti - 1) + ti * P.c[i - 1]
        qj = tj * (tj - 1) + tj * P.c[j - 1]
        second = qj * li - qi * lj - s * ((th + P.a - 1) * (th + P.b - 1) * lij)
        for name, rel in (("x_j l_i - l_ij - x_i l_j", first), ("theta display", second)):
            detail = {"i": i, "j": j}
            if rel:
                detail["first_difference"] = first_difference(rel)
            checks.append(Check(f"syzygy[{name}](m={m},i={i},j={j})", not rel, detail))
    return checks


def syzygy_suite(m: int, P: ParamSet | None = None, completed: bool = False) -> list[Check]:
    """The two displayed syzygies plus the dehomogenization of every S-pair case."""
    if m < 2:
        raise ValueError("syzygies need m >= 2")
    P = P or ParamSet.symbolic(m)
    checks = verify_syzygy_displays(m, P)
    checks += [syzygy_from_case(P, case) for case in spair_cases(P, completed)]
    return checks
