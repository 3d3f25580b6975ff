"""Fuzzy subsets with exact rational grades, their cuts, and fuzzy ideal predicates.

A fuzzy subset over a carrier of size n is a tuple of n Fraction grades in
[0, 1]. All comparisons and threshold arithmetic are exact, so a strict
inequality between two grades can never be blurred by rounding.
"""

from __future__ import annotations

from fractions import Fraction

from .automorphisms import Automorphism, enumerate_automorphisms
from .ideals import CrispSubset, check_subset
from .structures import InputError, PASS, PoGammaSemigroup, Verdict, fail

Grade = Fraction
FuzzySubset = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def check_grade(value) -> Grade:
    try:
        g = Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"cannot read {value!r} as a grade") from exc
    if g < 0 or g > 1:
        raise InputError(f"grade {g} outside [0, 1]")
    return g


def make_fuzzy(grades) -> FuzzySubset:
    """Normalize a sequence of rationals into a grade tuple."""
    return tuple(check_grade(g) for g in grades)


def check_fuzzy(n: int, mu) -> FuzzySubset:
    out = make_fuzzy(mu)
    if len(out) != n:
        raise InputError(f"expected {n} grades, got {len(out)}")
    return out


def check_support(mu: FuzzySubset) -> None:
    if not any(g > 0 for g in mu):
        raise InputError("fuzzy subset has empty support")


def t_cut(mu, t) -> CrispSubset:
    """Elements graded at least t."""
    mu = make_fuzzy(mu)
    t = Fraction(t)
    if t < 0 or t > 1:
        raise InputError(f"cut level {t} outside [0, 1]")
    return frozenset(x for x, g in enumerate(mu) if g >= t)


def image_levels(mu) -> list[Grade]:
    """Distinct grades attained by mu, ascending. Every distinct non-empty cut
    arises at one of these levels or at level 0."""
    return sorted(set(make_fuzzy(mu)))


def _ranks(mu: FuzzySubset) -> tuple[int, ...]:
    # only the order of grades matters to the predicates; small ints compare faster
    order = {g: i for i, g in enumerate(sorted(set(mu)))}
    return tuple(order[g] for g in mu)


def is_fuzzy_subsemigroup(s: PoGammaSemigroup, mu) -> Verdict:
    """Every product graded at least the min of its two outer grades.

    Witness carries (x, gamma, y) plus both sides of the failed inequality,
    scanning (x, gamma, y) lexicographically over the whole carrier.
    """
    mu = check_fuzzy(s.n, mu)
    check_support(mu)
    verdict = _fuzzy_sub_clause(s, mu, _ranks(mu))
    return verdict if verdict is not None else PASS


def _fuzzy_sub_clause(s, mu, rk):
    tbl = s.sgp.table
    n, m = s.n, s.m
    for x in range(n):
        for g in range(m):
            row = tbl[x][g]
            for y in range(n):
                need = rk[x] if rk[x] < rk[y] else rk[y]
                if rk[row[y]] < need:
                    return fail(
                        "subsemigroup", x, g, y, mu[row[y]], min(mu[x], mu[y])
                    )
    return None


def _fuzzy_interior_clause(s, mu, rk):
    tbl = s.sgp.table
    n, m = s.n, s.m
    for x in range(n):
        for al in range(m):
            row = tbl[x][al]
            for y in range(n):
                for be in range(m):
                    for a in range(n):
                        prod = tbl[row[a]][be][y]
                        if rk[prod] < rk[a]:
                            return fail(
                                "interior", x, al, a, be, y, mu[prod], mu[a]
                            )
    return None


def _antitone_clause(s, mu, rk):
    mat = s.order.rel
    for x in range(s.n):
        for y in range(s.n):
            if x != y and mat[x][y] and rk[x] < rk[y]:
                return fail("antitone", x, y, mu[x], mu[y])
    return None


def is_fuzzy_interior_ideal(s: PoGammaSemigroup, mu) -> Verdict:
    """Fuzzy subsemigroup, absorbing in the middle, antitone along the order.

    Clause order is fixed: subsemigroup, then the interior inequality
    mu(x alpha a beta y) >= mu(a) scanned with nesting x, alpha, y, beta, a
    and reported in product order, then antitone (x <= y forces
    mu(x) >= mu(y)) scanned over (x, y).
    """
    mu = check_fuzzy(s.n, mu)
    check_support(mu)
    rk = _ranks(mu)
    for clause in (_fuzzy_sub_clause, _fuzzy_interior_clause, _antitone_clause):
        verdict = clause(s, mu, rk)
        if verdict is not None:
            return verdict
    return PASS


def characteristic_function(n: int, a) -> FuzzySubset:
    """Grade 1 on the subset, 0 elsewhere."""
    members = check_subset(n, a)
    return tuple(ONE if x in members else ZERO for x in range(n))


def compose_with_automorphism(mu, f: Automorphism) -> FuzzySubset:
    """The fuzzy subset x -> mu(f(x))."""
    mu = make_fuzzy(mu)
    if len(f) != len(mu):
        raise InputError("permutation and fuzzy subset sizes differ")
    return tuple(mu[f[x]] for x in range(len(mu)))


def is_fuzzy_characteristic_interior_ideal(s: PoGammaSemigroup, mu) -> Verdict:
    """Fuzzy interior ideal with every automorphism grade-preserving.

    A failing fuzzy-interior check is returned unchanged; otherwise the
    witness names the first automorphism f and least x with
    mu(f(x)) != mu(x), plus the two grades.
    """
    mu = check_fuzzy(s.n, mu)
    check_support(mu)
    rk = _ranks(mu)
    for clause in (_fuzzy_sub_clause, _fuzzy_interior_clause, _antitone_clause):
        verdict = clause(s, mu, rk)
        if verdict is not None:
            return verdict
    for f in enumerate_automorphisms(s):
        for x in range(s.n):
            if mu[f[x]] != mu[x]:
                return fail("invariance", f, x, mu[x], mu[f[x]])
    return PASS
