"""Finite Gamma-semigroups with a compatible partial order.

Elements and sorts are dense integer ids: the carrier is {0..n-1} and the
sort set is {0..m-1}. The ternary operation is a total n*m*n table, the
order a full boolean matrix. Structures are immutable once built; the
validators below return a Verdict whose witness, on failure, is the first
counterexample in a fixed scan order, so results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass


class InputError(ValueError):
    """Malformed input: bad shapes, out-of-range ids, empty subsets."""


@dataclass(frozen=True)
class Witness:
    """First counterexample found by a check, in its documented scan order."""

    clause: str
    data: tuple


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decidable check; failing verdicts carry a witness."""

    ok: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.ok


PASS = Verdict(True)


def fail(clause: str, *data) -> Verdict:
    return Verdict(False, Witness(clause, tuple(data)))


def check_element(n: int, x) -> int:
    if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
        raise InputError(f"element id {x!r} out of range [0, {n})")
    return x


def check_sort(m: int, g) -> int:
    if not isinstance(g, int) or isinstance(g, bool) or not 0 <= g < m:
        raise InputError(f"sort id {g!r} out of range [0, {m})")
    return g


def check_table_shape(n: int, m: int, table) -> None:
    """Reject anything that is not a total n*m*n table over the carrier."""
    if n < 1 or m < 1:
        raise InputError("carrier and sort set must be non-empty")
    if len(table) != n:
        raise InputError(f"table has {len(table)} element planes, expected {n}")
    for a, plane in enumerate(table):
        if len(plane) != m:
            raise InputError(f"plane {a} has {len(plane)} rows, expected {m}")
        for g, row in enumerate(plane):
            if len(row) != n:
                raise InputError(f"row ({a},{g}) has {len(row)} entries, expected {n}")
            for b, v in enumerate(row):
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                    raise InputError(
                        f"table entry ({a},{g},{b}) = {v!r} out of range [0, {n})"
                    )


@dataclass(frozen=True)
class GammaSemigroup:
    """Carrier size, sort count, and the total product table.

    ``table[a][g][b]`` is the product of a and b under sort g.
    """

    n: int
    m: int
    table: tuple[tuple[tuple[int, ...], ...], ...]

    @classmethod
    def from_table(cls, n: int, m: int, table) -> "GammaSemigroup":
        check_table_shape(n, m, table)
        frozen = tuple(tuple(tuple(row) for row in plane) for plane in table)
        return cls(n, m, frozen)

    def product(self, a: int, g: int, b: int) -> int:
        check_element(self.n, a)
        check_sort(self.m, g)
        check_element(self.n, b)
        return self.table[a][g][b]


def validate_gamma_semigroup(n: int, m: int, table) -> Verdict:
    """Decide associativity across every sort pair.

    Scans (a, alpha, b, beta, c) lexicographically and reports the first
    tuple where (a alpha b) beta c differs from a alpha (b beta c).
    Malformed tables raise InputError instead of failing the verdict.
    """
    check_table_shape(n, m, table)
    elems = range(n)
    sorts = range(m)
    for a in elems:
        for al in sorts:
            row = table[a][al]
            for b in elems:
                ab = row[b]
                for be in sorts:
                    left = table[ab][be]
                    right = table[b][be]
                    for c in elems:
                        if left[c] != table[a][al][right[c]]:
                            return fail("associativity", a, al, b, be, c)
    return PASS


@dataclass(frozen=True)
class PartialOrder:
    """Reflexive, antisymmetric, transitive relation as a boolean matrix."""

    rel: tuple[tuple[bool, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rel)

    def le(self, a: int, b: int) -> bool:
        check_element(self.n, a)
        check_element(self.n, b)
        return self.rel[a][b]

    @classmethod
    def discrete(cls, n: int) -> "PartialOrder":
        if n < 1:
            raise InputError("carrier must be non-empty")
        return cls(tuple(tuple(i == j for j in range(n)) for i in range(n)))

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "PartialOrder":
        """Diagonal plus exactly the given pairs; no transitive closure is taken."""
        if n < 1:
            raise InputError("carrier must be non-empty")
        rel = [[i == j for j in range(n)] for i in range(n)]
        for i, j in pairs:
            check_element(n, i)
            check_element(n, j)
            rel[i][j] = True
        return cls(tuple(tuple(row) for row in rel))

    def pairs(self) -> list[tuple[int, int]]:
        """Non-reflexive related pairs in lexicographic order."""
        return [
            (i, j)
            for i in range(self.n)
            for j in range(self.n)
            if i != j and self.rel[i][j]
        ]


def validate_partial_order(rel) -> Verdict:
    """Check the three order axioms, each with a lexicographically first witness.

    Accepts a PartialOrder or a raw square boolean matrix. Clause order is
    reflexive, antisymmetric, transitive.
    """
    mat = rel.rel if isinstance(rel, PartialOrder) else tuple(tuple(r) for r in rel)
    n = len(mat)
    if n < 1:
        raise InputError("order matrix must be non-empty")
    for row in mat:
        if len(row) != n:
            raise InputError("order matrix must be square")
    for a in range(n):
        if not mat[a][a]:
            return fail("reflexive", a)
    for a in range(n):
        for b in range(a + 1, n):
            if mat[a][b] and mat[b][a]:
                return fail("antisymmetric", a, b)
    for a in range(n):
        for b in range(n):
            if not mat[a][b]:
                continue
            row_b = mat[b]
            row_a = mat[a]
            for c in range(n):
                if row_b[c] and not row_a[c]:
                    return fail("transitive", a, b, c)
    return PASS


def validate_compatibility(sgp: GammaSemigroup, order: PartialOrder) -> Verdict:
    """Order must survive multiplication on both sides.

    For every a <= b, every c and every sort g, requires a g c <= b g c and
    c g a <= c g b. Scans (a, b, c, g) lexicographically, checking the right
    translation (c on the right) before the left one; the witness carries
    (a, b, c, g, side) with side "right" or "left" accordingly.
    """
    if order.n != sgp.n:
        raise InputError(
            f"order is over {order.n} elements, structure has {sgp.n}"
        )
    tbl = sgp.table
    mat = order.rel
    n, m = sgp.n, sgp.m
    for a in range(n):
        for b in range(n):
            if a == b or not mat[a][b]:
                continue
            for c in range(n):
                for g in range(m):
                    if not mat[tbl[a][g][c]][tbl[b][g][c]]:
                        return fail("compatibility", a, b, c, g, "right")
                    if not mat[tbl[c][g][a]][tbl[c][g][b]]:
                        return fail("compatibility", a, b, c, g, "left")
    return PASS


@dataclass(frozen=True)
class PoGammaSemigroup:
    """A validated operation table together with a compatible order."""

    sgp: GammaSemigroup
    order: PartialOrder

    @property
    def n(self) -> int:
        return self.sgp.n

    @property
    def m(self) -> int:
        return self.sgp.m

    def product(self, a: int, g: int, b: int) -> int:
        return self.sgp.product(a, g, b)

    def le(self, a: int, b: int) -> bool:
        return self.order.le(a, b)


class ValidationError(ValueError):
    """A candidate structure failed one of its defining laws."""

    def __init__(self, rule: str, verdict: Verdict):
        self.rule = rule
        self.verdict = verdict
        detail = verdict.witness.data if verdict.witness else ()
        super().__init__(f"{rule} failed at {detail}")


def build_structure(sgp: GammaSemigroup, order: PartialOrder) -> PoGammaSemigroup:
    """Validate all three laws and assemble; downstream code assumes this ran."""
    v = validate_gamma_semigroup(sgp.n, sgp.m, sgp.table)
    if not v:
        raise ValidationError("associativity", v)
    v = validate_partial_order(order)
    if not v:
        raise ValidationError("order-axiom", v)
    v = validate_compatibility(sgp, order)
    if not v:
        raise ValidationError("compatibility", v)
    return PoGammaSemigroup(sgp, order)
