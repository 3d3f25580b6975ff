"""Carrier permutations preserving products and order, and invariant ideals."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .ideals import CrispSubset, check_subset, is_interior_ideal
from .structures import InputError, PASS, PoGammaSemigroup, Verdict, fail

Automorphism = tuple[int, ...]


def check_permutation(n: int, perm) -> Automorphism:
    p = tuple(perm)
    if len(p) != n or sorted(p) != list(range(n)):
        raise InputError(f"{p!r} is not a bijection of a {n}-element carrier")
    return p


def is_automorphism(s: PoGammaSemigroup, perm) -> Verdict:
    """Bijection that preserves every sorted product and reflects the order.

    Sorts are left untouched, only the carrier is permuted. Clause order:
    operation preservation scanned over (x, gamma, y), then the two-way
    order condition scanned over (x, y). Non-bijective input raises
    InputError rather than failing the verdict.
    """
    p = check_permutation(s.n, perm)
    tbl = s.sgp.table
    for x in range(s.n):
        for g in range(s.m):
            row = tbl[x][g]
            for y in range(s.n):
                if p[row[y]] != tbl[p[x]][g][p[y]]:
                    return fail("operation", x, g, y)
    mat = s.order.rel
    for x in range(s.n):
        for y in range(s.n):
            if mat[x][y] != mat[p[x]][p[y]]:
                return fail("order", x, y)
    return PASS


@lru_cache(maxsize=None)
def enumerate_automorphisms(s: PoGammaSemigroup) -> tuple[Automorphism, ...]:
    """Every automorphism in lexicographic order; always contains the identity."""
    return tuple(
        p for p in permutations(range(s.n)) if is_automorphism(s, p)
    )


def apply_to_subset(f: Automorphism, a) -> CrispSubset:
    return frozenset(f[x] for x in a)


def is_characteristic_interior_ideal(s: PoGammaSemigroup, a) -> Verdict:
    """Interior ideal fixed setwise by every automorphism.

    A failing interior-ideal check is returned unchanged; otherwise the
    witness names the first automorphism (in enumeration order) moving the
    subset, together with the least member whose image escapes.
    """
    members = check_subset(s.n, a)
    return _characteristic_verdict(s, members)


@lru_cache(maxsize=1 << 16)
def _characteristic_verdict(s: PoGammaSemigroup, members: CrispSubset) -> Verdict:
    inner = is_interior_ideal(s, members)
    if not inner:
        return inner
    for f in enumerate_automorphisms(s):
        if apply_to_subset(f, members) != members:
            moved = min(x for x in members if f[x] not in members)
            return fail("invariance", f, moved)
    return PASS
