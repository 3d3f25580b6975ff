"""Exhaustive and sampled corpus generation at desk scale.

Full enumeration of operation tables explodes as n**(n*n*m), so every
enumerator here refuses carriers or sort sets beyond a configured ceiling.
The default ceiling is 4 elements and 2 sorts; set POGS_ENUM_CEILING to
"N,M" to override it deliberately.
"""

from __future__ import annotations

import enum
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _product
from typing import Iterator

from .fuzzy import FuzzySubset, ONE, ZERO, check_grade
from .structures import (
    GammaSemigroup,
    InputError,
    PartialOrder,
    PoGammaSemigroup,
    validate_compatibility,
    validate_partial_order,
)

CEILING_VAR = "POGS_ENUM_CEILING"
_DEFAULT_CEILING = (4, 2)


def enumeration_ceiling() -> tuple[int, int]:
    """Largest (elements, sorts) the full enumerations accept."""
    raw = os.environ.get(CEILING_VAR)
    if raw is None:
        return _DEFAULT_CEILING
    try:
        a, b = raw.split(",")
        ceiling = (int(a), int(b))
    except ValueError as exc:
        raise InputError(f"cannot parse {CEILING_VAR}={raw!r}, expected \"N,M\"") from exc
    if ceiling[0] < 1 or ceiling[1] < 1:
        raise InputError(f"{CEILING_VAR} entries must be positive")
    return ceiling


def _guard(n: int, m: int, what: str) -> None:
    if n < 1 or m < 1:
        raise InputError("carrier and sort set must be non-empty")
    cn, cm = enumeration_ceiling()
    if n > cn or m > cm:
        raise InputError(
            f"{what} at n={n}, m={m} exceeds the ceiling ({cn} elements, {cm} sorts); "
            f"set {CEILING_VAR} to override"
        )


def _associative_tables(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All associative n*n tables, yielded in row-major lexicographic order.

    Backtracks over cells (a, b); after each placement every instance of the
    law whose four lookups are all known is checked, and instances already
    verified stay verified further down the branch.
    """
    cells = n * n
    table = [[0] * n for _ in range(n)]
    known = [[False] * n for _ in range(n)]
    triples = [(x, y, z) for x in range(n) for y in range(n) for z in range(n)]
    pending = set(range(len(triples)))

    def settled(idx: int):
        # None while some lookup is still open, else whether the law holds
        x, y, z = triples[idx]
        if not known[x][y]:
            return None
        p = table[x][y]
        if not known[p][z]:
            return None
        lhs = table[p][z]
        if not known[y][z]:
            return None
        q = table[y][z]
        if not known[x][q]:
            return None
        return lhs == table[x][q]

    def fill(k: int):
        if k == cells:
            yield tuple(tuple(row) for row in table)
            return
        a, b = divmod(k, n)
        known[a][b] = True
        for v in range(n):
            table[a][b] = v
            done = []
            ok = True
            for idx in list(pending):
                state = settled(idx)
                if state is None:
                    continue
                if not state:
                    ok = False
                    break
                done.append(idx)
            if ok:
                pending.difference_update(done)
                yield from fill(k + 1)
                pending.update(done)
        known[a][b] = False

    yield from fill(0)


def _cross_associative(n: int, ops) -> bool:
    m = len(ops)
    rng = range(n)
    for ga in range(m):
        ta = ops[ga]
        for gb in range(m):
            if ga == gb:
                continue
            tb = ops[gb]
            for x in rng:
                tax = ta[x]
                for y in rng:
                    tb_y = tb[y]
                    lrow = tb[tax[y]]
                    for z in rng:
                        if lrow[z] != tax[tb_y[z]]:
                            return False
    return True


def _wrap(n: int, m: int, ops) -> GammaSemigroup:
    table = tuple(tuple(ops[g][a] for g in range(m)) for a in range(n))
    return GammaSemigroup(n, m, table)


def enumerate_gamma_semigroups(n: int, m: int) -> Iterator[GammaSemigroup]:
    """Every table passing the associativity law, in lexicographic table order.

    Lexicographic means the flattened cell sequence (a, g, b). For several
    sorts the per-sort tables are enumerated first and merged, then sorted
    back into that cell order, which matches what direct backtracking over
    the interleaved cells would produce.
    """
    _guard(n, m, "table enumeration")
    if m == 1:
        for t in _associative_tables(n):
            yield _wrap(n, 1, (t,))
        return
    singles = list(_associative_tables(n))
    valid = [
        combo
        for combo in _product(singles, repeat=m)
        if _cross_associative(n, combo)
    ]
    valid.sort(
        key=lambda ops: tuple(
            ops[g][a][b] for a in range(n) for g in range(m) for b in range(n)
        )
    )
    for ops in valid:
        yield _wrap(n, m, ops)


def enumerate_compatible_orders(sgp: GammaSemigroup) -> Iterator[PartialOrder]:
    """All partial orders compatible with the table, discrete order first.

    Candidates are bitmasks over the non-reflexive pairs in lexicographic
    order, so the output sequence is deterministic.
    """
    _guard(sgp.n, 1, "order enumeration")
    n = sgp.n
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for mask in range(1 << len(pairs)):
        rel = [[i == j for j in range(n)] for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                rel[i][j] = True
        order = PartialOrder(tuple(tuple(row) for row in rel))
        if validate_partial_order(order) and validate_compatibility(sgp, order):
            yield order


def _normalize_grades(grade_set) -> tuple[Fraction, ...]:
    grades = sorted({check_grade(g) for g in grade_set})
    if not grades:
        raise InputError("grade set must be non-empty")
    return tuple(grades)


def enumerate_fuzzy_subsets(n: int, grade_set) -> Iterator[FuzzySubset]:
    """All grade assignments except the all-zero one, lexicographic by value."""
    _guard(n, 1, "fuzzy enumeration")
    grades = _normalize_grades(grade_set)
    for combo in _product(grades, repeat=n):
        if any(g > 0 for g in combo):
            yield combo


def sample_fuzzy_subset(n: int, grade_set, seed: int) -> FuzzySubset:
    """One deterministic draw: Mersenne Twister seeded as given, a uniform
    grade index per position, the whole tuple redrawn while it is all zero."""
    if n < 1:
        raise InputError("carrier must be non-empty")
    grades = _normalize_grades(grade_set)
    if not any(g > 0 for g in grades):
        raise InputError("grade set needs a non-zero grade")
    rng = random.Random(seed)
    k = len(grades)
    while True:
        mu = tuple(grades[rng.randrange(k)] for _ in range(n))
        if any(g > 0 for g in mu):
            return mu


class OrdersMode(enum.Enum):
    DISCRETE_ONLY = "discrete_only"
    ALL_COMPATIBLE = "all_compatible"


@dataclass(frozen=True)
class GeneratorConfig:
    """Bounds and knobs for corpus generation."""

    max_n: int
    max_m: int
    orders: OrdersMode = OrdersMode.ALL_COMPATIBLE
    grade_set: tuple[Fraction, ...] = (ZERO, Fraction(1, 2), ONE)
    seed: int = 0

    def __post_init__(self):
        if self.max_n < 1 or self.max_m < 1:
            raise InputError("bounds must be at least 1")
        grades = _normalize_grades(self.grade_set)
        if ZERO not in grades or ONE not in grades:
            raise InputError("grade set must contain 0 and 1")
        object.__setattr__(self, "grade_set", grades)
        if not isinstance(self.orders, OrdersMode):
            raise InputError(f"unknown orders mode {self.orders!r}")


def iter_structures(config: GeneratorConfig) -> Iterator[PoGammaSemigroup]:
    """The corpus the config describes, in a fixed deterministic order."""
    for n in range(1, config.max_n + 1):
        for m in range(1, config.max_m + 1):
            for sgp in enumerate_gamma_semigroups(n, m):
                if config.orders is OrdersMode.DISCRETE_ONLY:
                    yield PoGammaSemigroup(sgp, PartialOrder.discrete(n))
                else:
                    for order in enumerate_compatible_orders(sgp):
                        yield PoGammaSemigroup(sgp, order)
