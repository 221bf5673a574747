"""Dimension and degree of monomial ideals by exhaustive subset enumeration.

Instances here have at most a dozen variables, so the coordinate-subspace
decomposition is enumerated directly over bitmasks.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import NonSquarefree


def _support_mask(exps: Sequence[int]) -> int:
    mask = 0
    for i, k in enumerate(exps):
        if k:
            mask |= 1 << i
    return mask


def _independent(mask: int, supports: list[int]) -> bool:
    # S avoids the ideal iff no generator is supported inside S.
    return all(s & ~mask for s in supports)


def monomial_ideal_dimension(gens: Iterable[Sequence[int]], n_vars: int) -> int:
    """Krull dimension of ``k[x_1..x_n] / <gens>`` for monomial generators.

    The zero set is a union of coordinate subspaces spanned by variable sets S
    that contain no generator's support; the dimension is the largest |S|.
    Returns -1 when the ideal is the whole ring (a generator equals 1).
    """
    supports = [_support_mask(e) for e in gens]
    if any(s == 0 for s in supports):
        return -1
    best = 0
    for mask in range(1 << n_vars):
        size = bin(mask).count("1")
        if size > best and _independent(mask, supports):
            best = size
    return best


def squarefree_ideal_facets(gens: Iterable[Sequence[int]], n_vars: int) -> list[frozenset[int]]:
    """Maximal variable sets avoiding every generator (Stanley-Reisner facets)."""
    gens = [tuple(e) for e in gens]
    for e in gens:
        if any(k > 1 for k in e):
            raise NonSquarefree(f"generator with exponents {e} is not squarefree")
    supports = [_support_mask(e) for e in gens]
    if any(s == 0 for s in supports):
        return []
    faces = [m for m in range(1 << n_vars) if _independent(m, supports)]
    facets = []
    for m in faces:
        maximal = True
        for i in range(n_vars):
            bit = 1 << i
            if not m & bit and _independent(m | bit, supports):
                maximal = False
                break
        if maximal:
            facets.append(frozenset(i for i in range(n_vars) if m >> i & 1))
    return facets


def squarefree_ideal_degree(gens: Iterable[Sequence[int]], n_vars: int) -> tuple[int, int]:
    """``(dimension, degree)`` of a squarefree monomial ideal.

    The degree counts the top-dimensional coordinate subspaces, each of
    which contributes multiplicity one.
    """
    facets = squarefree_ideal_facets(gens, n_vars)
    if not facets:
        return -1, 0
    dim = max(len(f) for f in facets)
    return dim, sum(1 for f in facets if len(f) == dim)
