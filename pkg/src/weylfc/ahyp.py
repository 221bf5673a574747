"""The A-hypergeometric side: the matrix A(F_C, m), its toric ideal,
holonomic rank through a squarefree initial ideal, the P_J irreducibility
test and the Euler-operator pushforward under a monomial change of variables.

Column and variable order is ``1, ..., m+1, -1, ..., -(m+1)``; in a Weyl or
polynomial context, the j-th negative index sits at position ``m+1+j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from typing import Sequence

from .cpoly import (
    CPoly,
    MonomialOrder,
    cpoly_buchberger,
    cpoly_normal_form,
    ideals_equal,
    saturate_by_variable,
)
from .errors import SingularChange
from .lauricella.operators import ParamSet
from .monomial_ideals import squarefree_ideal_degree
from .scalars import ParamScalar
from .weyl import WeylContext, WeylElement

IntMatrix = list[list[int]]


# ---------------------------------------------------------------------------
# A(F_C, m)
# ---------------------------------------------------------------------------


def build_A(m: int) -> IntMatrix:
    """Columns ``e_i + e_{m+2}`` then ``-e_i + e_{m+2}`` for i = 1..m+1."""
    if m < 1:
        raise ValueError("m must be at least 1")
    rows = m + 2
    cols = []
    for sign in (1, -1):
        for i in range(m + 1):
            col = [0] * rows
            col[i] = sign
            col[-1] = 1
            cols.append(col)
    return [[col[r] for col in cols] for r in range(rows)]


def signed_labels(m: int) -> list[int]:
    """``[1, ..., m+1, -1, ..., -(m+1)]``."""
    return list(range(1, m + 2)) + [-j for j in range(1, m + 2)]


def fc_variable_names(m: int) -> tuple[str, ...]:
    return tuple(f"d{j}" for j in signed_labels(m))


def position(m: int, j: int) -> int:
    """0-based position of the signed index j."""
    if j == 0 or abs(j) > m + 1:
        raise ValueError(f"index {j} outside +-1..+-{m + 1}")
    return j - 1 if j > 0 else m + abs(j)


# ---------------------------------------------------------------------------
# Integer linear algebra
# ---------------------------------------------------------------------------


def hermite_normal_form(M: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style HNF: returns ``(H, U)`` with ``U M = H`` and U unimodular.

    H is in row echelon form, every pivot is positive and the entries above
    a pivot lie in ``[0, pivot)``.
    """
    H = [list(r) for r in M]
    n = len(H)
    ncols = len(H[0]) if H else 0
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    r = 0
    for c in range(ncols):
        if r == n:
            break
        while True:
            nz = [i for i in range(r, n) if H[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(H[i][c]))
            H[r], H[p] = H[p], H[r]
            U[r], U[p] = U[p], U[r]
            done = True
            for i in range(r + 1, n):
                if H[i][c]:
                    q = H[i][c] // H[r][c]
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
                    if H[i][c]:
                        done = False
            if done:
                break
        if not H[r][c]:
            continue
        if H[r][c] < 0:
            H[r] = [-a for a in H[r]]
            U[r] = [-a for a in U[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                U[i] = [a - q * b for a, b in zip(U[i], U[r])]
        r += 1
    return H, U


def integer_kernel(A: IntMatrix) -> IntMatrix:
    """A Z-basis of ``{u in Z^n : A u = 0}``."""
    n = len(A[0])
    At = [[A[r][c] for r in range(len(A))] for c in range(n)]
    H, U = hermite_normal_form(At)
    return [U[i] for i in range(n) if not any(H[i])]


def mat_vec(A: IntMatrix, u: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(a * b for a, b in zip(row, u)) for row in A)


def rational_det(B: Sequence[Sequence[int]]) -> Fraction:
    """Determinant by Gaussian elimination over Fraction."""
    M = [[Fraction(v) for v in row] for row in B]
    n = len(M)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for i in range(c + 1, n):
            f = M[i][c] / M[c][c]
            if f:
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return det


# ---------------------------------------------------------------------------
# Toric ideals
# ---------------------------------------------------------------------------


def binomial(ctx: tuple[str, ...], u: Sequence[int], v: Sequence[int]) -> CPoly:
    return CPoly(ctx, {tuple(u): 1}) - CPoly(ctx, {tuple(v): 1})


def lattice_binomial(ctx: tuple[str, ...], w: Sequence[int]) -> CPoly:
    return binomial(ctx, [max(k, 0) for k in w], [max(-k, 0) for k in w])


def toric_ideal(
    A: IntMatrix,
    names: Sequence[str] | None = None,
    order: MonomialOrder | None = None,
) -> list[CPoly]:
    """Reduced Groebner basis of ``I_A``.

    Lattice-basis binomials are saturated one variable at a time; this needs
    homogeneous binomials, i.e. a row space containing a positive vector.
    """
    n = len(A[0])
    ctx = tuple(names) if names else tuple(f"d{i}" for i in range(1, n + 1))
    order = order or MonomialOrder.degrevlex(n)
    gens = [lattice_binomial(ctx, w) for w in integer_kernel(A)]
    if not gens:
        return []
    for var in range(n):
        gens = saturate_by_variable(gens, var)
    return cpoly_buchberger(gens, order)


def fc_toric_generators(m: int) -> list[CPoly]:
    """``d_j d_-j - d_{m+1} d_-(m+1)`` for j = 1..m."""
    ctx = fc_variable_names(m)
    n = len(ctx)
    out = []
    top = [0] * n
    top[position(m, m + 1)] = top[position(m, -(m + 1))] = 1
    for j in range(1, m + 1):
        e = [0] * n
        e[position(m, j)] = e[position(m, -j)] = 1
        out.append(binomial(ctx, e, top))
    return out


def fc_order(m: int) -> MonomialOrder:
    """degrevlex with d_{m+1}, d_-(m+1) smallest, so ``d_j d_-j`` leads."""
    n = 2 * m + 2
    last = [position(m, m + 1), position(m, -(m + 1))]
    return MonomialOrder.degrevlex(n, [i for i in range(n) if i not in last] + last)


def toric_matches_generators(m: int) -> bool:
    """Computed ``I_A`` and the displayed generators reduce each other to 0."""
    order = fc_order(m)
    computed = toric_ideal(build_A(m), fc_variable_names(m), order)
    return ideals_equal(computed, fc_toric_generators(m), order)


def brute_force_binomials(A: IntMatrix, max_degree: int) -> list[tuple[tuple, tuple]]:
    """All pairs ``u != v`` with ``|u|, |v| <= max_degree`` and ``A u = A v``."""
    n = len(A[0])
    groups: dict[tuple, list[tuple]] = {}
    for d in range(max_degree + 1):
        for combo in combinations_with_replacement(range(n), d):
            u = [0] * n
            for i in combo:
                u[i] += 1
            groups.setdefault(mat_vec(A, u), []).append(tuple(u))
    return [(u, v) for vs in groups.values() for u, v in combinations(vs, 2)]


def brute_force_oracle(m: int, max_degree: int = 4) -> tuple[int, int]:
    """Reduce every brute-force binomial modulo the computed basis.

    Returns ``(total, failures)``.
    """
    A = build_A(m)
    ctx = fc_variable_names(m)
    order = fc_order(m)
    gb = toric_ideal(A, ctx, order)
    pairs = brute_force_binomials(A, max_degree)
    bad = sum(1 for u, v in pairs if cpoly_normal_form(binomial(ctx, u, v), gb, order))
    return len(pairs), bad


def rank_via_degree(m: int) -> int:
    """Degree of the initial ideal ``<d_j d_-j>`` of I_A, i.e. the holonomic rank."""
    order = fc_order(m)
    gb = cpoly_buchberger(fc_toric_generators(m), order)
    leads = [g.leading_monomial(order) for g in gb]
    _, degree = squarefree_ideal_degree(leads, 2 * m + 2)
    return degree


# ---------------------------------------------------------------------------
# Euler operators and the parameter beta
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BetaVector:
    entries: tuple[ParamScalar, ...]

    @classmethod
    def from_params(cls, P: ParamSet) -> "BetaVector":
        """``(1-c_1, ..., 1-c_m, b-a, sum c_j - a - b - m)``."""
        one = ParamScalar.const(1)
        head = tuple(one - c for c in P.c)
        total = ParamScalar.const(-P.m) - P.a - P.b
        for c in P.c:
            total = total + c
        return cls(head + (P.b - P.a, total))

    @classmethod
    def zero(cls, m: int) -> "BetaVector":
        return cls(tuple(ParamScalar.const(0) for _ in range(m + 2)))

    def values(self) -> tuple[Fraction, ...]:
        return tuple(v.constant_value() for v in self.entries)


def u_context(m: int) -> WeylContext:
    return WeylContext(2 * m + 2, letter="u")


def euler_operators(m: int, beta: BetaVector) -> list[WeylElement]:
    """Rows of ``A theta_u - beta``: ``sum_k A_ik u_k d_k - beta_i``."""
    if len(beta.entries) != m + 2:
        raise ValueError(f"beta needs {m + 2} entries")
    A = build_A(m)
    ctx = u_context(m)
    thetas = [WeylElement.theta(ctx, k) for k in range(1, 2 * m + 3)]
    out = []
    for row, b in zip(A, beta.entries):
        op = WeylElement.const(ctx, -b)
        for a, th in zip(row, thetas):
            if a:
                op = op + th * a
        out.append(op)
    return out


# ---------------------------------------------------------------------------
# Irreducibility
# ---------------------------------------------------------------------------


def support_function(J: frozenset[int], s: Sequence, m: int):
    """``P_J(s) = (s_{m+2} + sum_{j in J} s_j - sum_{j not in J} s_j) / 2``."""
    total = s[m + 1]
    for j in range(1, m + 2):
        total = total + s[j - 1] if j in J else total - s[j - 1]
    return total * Fraction(1, 2)


def all_subsets(m: int) -> list[frozenset[int]]:
    idx = range(1, m + 2)
    return [frozenset(c) for k in range(m + 2) for c in combinations(idx, k)]


def _is_integer(q: Fraction) -> bool:
    return q.denominator == 1


def displayed_form(P: ParamSet, eps: Sequence[int]) -> Fraction:
    """``(sum c_i - a - b - 2 sum eps_i (1 - c_i) + eps_{m+1} (b - a)) / 2``
    read literally."""
    v = P.values()
    m = P.m
    cs = [v[f"c{i}"] for i in range(1, m + 1)]
    inner = sum(cs) - v["a"] - v["b"]
    inner -= 2 * sum(e * (1 - c) for e, c in zip(eps, cs))
    inner += eps[m] * (v["b"] - v["a"])
    return inner / 2


@dataclass
class IrreducibilityReport:
    m: int
    beta: tuple[Fraction, ...]
    values: dict[frozenset, Fraction] = field(default_factory=dict)
    displayed: dict[tuple, Fraction] = field(default_factory=dict)

    @property
    def integral_subsets(self) -> list[frozenset]:
        return [J for J, v in self.values.items() if _is_integer(v)]

    @property
    def irreducible(self) -> bool:
        return not self.integral_subsets

    @property
    def displayed_irreducible(self) -> bool:
        return not any(_is_integer(v) for v in self.displayed.values())

    @property
    def forms_agree(self) -> bool:
        return self.irreducible == self.displayed_irreducible


def irreducibility_check(P: ParamSet) -> IrreducibilityReport:
    """Irreducible iff no ``P_J(beta)`` is an integer, over all J in [1, m+1]."""
    beta = BetaVector.from_params(P).values()
    rep = IrreducibilityReport(P.m, beta)
    for J in all_subsets(P.m):
        rep.values[J] = support_function(J, beta, P.m)
    for eps in product((1, -1), repeat=P.m + 1):
        rep.displayed[eps] = displayed_form(P, eps)
    return rep


# ---------------------------------------------------------------------------
# Euler pushforward
# ---------------------------------------------------------------------------


def fc_change_of_variables(m: int) -> IntMatrix:
    """Exponent rows of ``z_k = u^{B_k}``.

    ``z_j = u_j u_-j / (u_{m+1} u_-(m+1))``, ``z_{m+j} = 1/u_-j``,
    ``z_{2m+1} = 1/u_{m+1}``, ``z_{2m+2} = 1/u_-(m+1)``.
    """
    n = 2 * m + 2
    B = []
    for j in range(1, m + 1):
        row = [0] * n
        row[position(m, j)] = row[position(m, -j)] = 1
        row[position(m, m + 1)] = row[position(m, -(m + 1))] = -1
        B.append(row)
    for j in range(1, m + 1):
        row = [0] * n
        row[position(m, -j)] = -1
        B.append(row)
    for j in (m + 1, -(m + 1)):
        row = [0] * n
        row[position(m, j)] = -1
        B.append(row)
    return B


def euler_pushforward(B: IntMatrix) -> IntMatrix:
    """T with ``u_i d_{u_i} = sum_k T[k][i] z_k d_{z_k}`` for ``z_k = u^{B_k}``.

    By the chain rule ``u_i d_{u_i} z_k = B[k][i] z_k``, so T = B.  The
    change must be a torus isomorphism.
    """
    n = len(B)
    if any(len(row) != n for row in B):
        raise SingularChange("change of variables must be square")
    if rational_det(B) == 0:
        raise SingularChange("exponent matrix is singular over Q")
    return [list(row) for row in B]


def displayed_pushforward(m: int) -> dict[int, dict[int, int]]:
    """The four displayed rules as ``{signed u index: {z index: coefficient}}``."""
    out: dict[int, dict[int, int]] = {}
    for j in range(1, m + 1):
        out[j] = {j: 1}
        out[-j] = {j: 1, m + j: -1}
    out[m + 1] = {**{k: -1 for k in range(1, m + 1)}, 2 * m + 1: -1}
    out[-(m + 1)] = {**{k: -1 for k in range(1, m + 1)}, 2 * m + 2: -1}
    return out


def pushforward_matches_display(m: int) -> bool:
    T = euler_pushforward(fc_change_of_variables(m))
    n = 2 * m + 2
    for j, rule in displayed_pushforward(m).items():
        col = position(m, j)
        expected = [rule.get(k, 0) for k in range(1, n + 1)]
        if [T[k][col] for k in range(n)] != expected:
            return False
    return True
