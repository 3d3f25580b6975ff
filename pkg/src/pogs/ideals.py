"""Crisp subsets of the carrier: closure predicates and enumeration."""

from __future__ import annotations

from functools import lru_cache

from .structures import InputError, PASS, PoGammaSemigroup, Verdict, fail

CrispSubset = frozenset[int]


def check_subset(n: int, a) -> CrispSubset:
    """Normalize to a frozenset, rejecting empty or out-of-range subsets."""
    members = frozenset(a)
    if not members:
        raise InputError("subset must be non-empty")
    for x in members:
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
            raise InputError(f"subset member {x!r} out of range [0, {n})")
    return members


def is_subsemigroup(s: PoGammaSemigroup, a) -> Verdict:
    """Closure of A under every sorted product, A Gamma A inside A.

    The witness is the first escaping (x, gamma, y), scanning members of A
    in ascending order with the sort in between.
    """
    members = check_subset(s.n, a)
    tbl = s.sgp.table
    elems = sorted(members)
    for x in elems:
        for g in range(s.m):
            row = tbl[x][g]
            for y in elems:
                if row[y] not in members:
                    return fail("subsemigroup", x, g, y)
    return PASS


def is_interior_ideal(s: PoGammaSemigroup, a) -> Verdict:
    """Subsemigroup, absorbing in the middle of any sorted product, downward closed.

    Clause order: subsemigroup, then the two-sided absorption S Gamma A Gamma S
    inside A, then downward closure. The absorption scan nests x, alpha, y,
    beta, e (e ranging over A innermost) and reports the witness in product
    order (x, alpha, e, beta, y). The downward witness is (a, b) with a in A,
    b <= a and b missing from A.
    """
    members = check_subset(s.n, a)
    return _interior_verdict(s, members)


@lru_cache(maxsize=1 << 16)
def _interior_verdict(s: PoGammaSemigroup, members: CrispSubset) -> Verdict:
    sub = is_subsemigroup(s, members)
    if not sub:
        return sub
    tbl = s.sgp.table
    n, m = s.n, s.m
    elems = sorted(members)
    for x in range(n):
        for al in range(m):
            row = tbl[x][al]
            for y in range(n):
                for be in range(m):
                    for e in elems:
                        if tbl[row[e]][be][y] not in members:
                            return fail("interior", x, al, e, be, y)
    mat = s.order.rel
    for a_el in elems:
        for b in range(n):
            if mat[b][a_el] and b not in members:
                return fail("downward", a_el, b)
    return PASS


def downward_closure(s: PoGammaSemigroup, a) -> CrispSubset:
    """Everything lying below some member; contains the input, idempotent."""
    members = frozenset(a)
    for x in members:
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < s.n:
            raise InputError(f"subset member {x!r} out of range [0, {s.n})")
    mat = s.order.rel
    return frozenset(
        b for b in range(s.n) if any(mat[b][x] for x in members)
    )


def enumerate_interior_ideals(s: PoGammaSemigroup) -> list[CrispSubset]:
    """All non-empty interior ideals, in ascending bitmask order (bit i = element i)."""
    found = []
    for mask in range(1, 1 << s.n):
        a = frozenset(x for x in range(s.n) if mask >> x & 1)
        if is_interior_ideal(s, a):
            found.append(a)
    return found
