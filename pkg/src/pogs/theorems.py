"""Executable equivalence checks between fuzzy and crisp invariant interior ideals.

Three finite claims are decided here, each as a two-sided report:

  * level criterion: a fuzzy subset is an invariant fuzzy interior ideal
    exactly when each of its non-empty cuts is an invariant interior ideal;
  * characteristic-function criterion: a subset is an invariant interior
    ideal exactly when its characteristic function is an invariant fuzzy
    interior ideal;
  * interior lemma: the same bridge without the invariance clause.

Checking cuts only at the attained grade levels (plus level 0) is enough,
because every non-empty cut equals one of those. When a fuzzy subset fails
one of the two product inequalities, the midpoint of the two sides of the
first failed instance is a threshold whose cut provably breaks the matching
crisp law; extract_midpoint_witness rebuilds that threshold and asserts the
breakage before returning it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .automorphisms import is_characteristic_interior_ideal
from .fuzzy import (
    FuzzySubset,
    ZERO,
    check_fuzzy,
    check_support,
    characteristic_function,
    image_levels,
    is_fuzzy_characteristic_interior_ideal,
    is_fuzzy_interior_ideal,
    t_cut,
)
from .generator import enumerate_fuzzy_subsets, sample_fuzzy_subset, _normalize_grades
from .ideals import check_subset, is_interior_ideal
from .structures import InputError, PoGammaSemigroup, Witness


@dataclass(frozen=True)
class EquivalenceReport:
    """Both sides of one instance of an equivalence claim.

    consistent is forward == backward; a witness accompanies exactly the
    inconsistent reports, coming from whichever side failed.
    """

    forward: bool
    backward: bool
    witness: Witness | None = None

    def __post_init__(self):
        if (self.witness is None) != (self.forward == self.backward):
            raise ValueError("witness must accompany exactly the inconsistent reports")

    @property
    def consistent(self) -> bool:
        return self.forward == self.backward


def _report(fwd_ok: bool, fwd_witness, back_ok: bool, back_witness) -> EquivalenceReport:
    if fwd_ok == back_ok:
        return EquivalenceReport(fwd_ok, back_ok)
    return EquivalenceReport(
        fwd_ok, back_ok, back_witness if fwd_ok else fwd_witness
    )


def check_level_criterion(s: PoGammaSemigroup, mu) -> EquivalenceReport:
    """Fuzzy invariant interior ideal vs the same property of every cut.

    The backward side checks the full carrier (the cut at level 0) and the
    cut at each attained level; those exhaust the distinct non-empty cuts.
    An inconsistent report would refute the equivalence, so callers should
    treat it as an event to surface, not to swallow.
    """
    mu = check_fuzzy(s.n, mu)
    check_support(mu)
    fwd = is_fuzzy_characteristic_interior_ideal(s, mu)
    back_ok = True
    back_witness = None
    seen = set()
    for level in [ZERO] + image_levels(mu):
        cut = t_cut(mu, level)
        if not cut or cut in seen:
            continue
        seen.add(cut)
        verdict = is_characteristic_interior_ideal(s, cut)
        if not verdict:
            back_ok = False
            w = verdict.witness
            back_witness = Witness("cut", (level, w.clause) + w.data)
            break
    return _report(fwd.ok, fwd.witness, back_ok, back_witness)


@dataclass(frozen=True)
class MidpointWitness:
    """A threshold strictly between the two sides of a failed grade inequality.

    t0 lies strictly above the product grade and strictly below the bound it
    should have met, so cut_at_t0 contains the high-graded elements but not
    the product: the cut breaks the matching crisp closure law.
    """

    clause: str
    elements: tuple
    t0: Fraction
    cut_at_t0: frozenset


def extract_midpoint_witness(s: PoGammaSemigroup, mu) -> MidpointWitness | None:
    """Halfway threshold for the first failed product inequality, if any.

    The subsemigroup inequality is scanned first over (x, g, y); on a
    failure t0 = (mu(x g y) + min(mu(x), mu(y))) / 2 and the witness records
    (x, g, y). Otherwise the interior inequality is scanned with nesting
    x, alpha, y, beta, a; on a failure t0 = (mu(x alpha a beta y) + mu(a)) / 2
    and the witness records (x, alpha, a, beta, y). Returns None when both
    inequalities hold, regardless of the order clause.
    """
    mu = check_fuzzy(s.n, mu)
    tbl = s.sgp.table
    n, m = s.n, s.m
    for x in range(n):
        for g in range(m):
            row = tbl[x][g]
            for y in range(n):
                low = mu[row[y]]
                high = min(mu[x], mu[y])
                if low < high:
                    t0 = (low + high) / 2
                    cut = t_cut(mu, t0)
                    assert low < t0 < high
                    assert x in cut and y in cut and row[y] not in cut
                    return MidpointWitness("subsemigroup", (x, g, y), t0, cut)
    for x in range(n):
        for al in range(m):
            row = tbl[x][al]
            for y in range(n):
                for be in range(m):
                    for a in range(n):
                        prod = tbl[row[a]][be][y]
                        low = mu[prod]
                        high = mu[a]
                        if low < high:
                            t0 = (low + high) / 2
                            cut = t_cut(mu, t0)
                            assert low < t0 < high
                            assert a in cut and prod not in cut
                            return MidpointWitness(
                                "interior", (x, al, a, be, y), t0, cut
                            )
    return None


def check_char_function_criterion(s: PoGammaSemigroup, a) -> EquivalenceReport:
    """Invariant interior ideal vs its characteristic function being the
    fuzzy invariant kind."""
    members = check_subset(s.n, a)
    fwd = is_characteristic_interior_ideal(s, members)
    back = is_fuzzy_characteristic_interior_ideal(
        s, characteristic_function(s.n, members)
    )
    return _report(fwd.ok, fwd.witness, back.ok, back.witness)


def check_lemma_char_function_interior(s: PoGammaSemigroup, a) -> EquivalenceReport:
    """Interior ideal vs its characteristic function being fuzzy interior."""
    members = check_subset(s.n, a)
    fwd = is_interior_ideal(s, members)
    back = is_fuzzy_interior_ideal(s, characteristic_function(s.n, members))
    return _report(fwd.ok, fwd.witness, back.ok, back.witness)


ALL_CHECKS = ("level", "char", "lemma")


@dataclass(frozen=True)
class Refutation:
    """One inconsistent equivalence report, with everything needed to replay it."""

    check: str
    structure_index: int
    structure: PoGammaSemigroup
    subject: tuple
    report: EquivalenceReport


@dataclass(frozen=True)
class SweepSummary:
    structures: int = 0
    level_checks: int = 0
    char_checks: int = 0
    lemma_checks: int = 0
    refutations: tuple[Refutation, ...] = ()


def merge_summaries(parts) -> SweepSummary:
    """Commutative counts, refutations concatenated in the given part order."""
    refutations: list[Refutation] = []
    structures = level = char = lemma = 0
    for p in parts:
        structures += p.structures
        level += p.level_checks
        char += p.char_checks
        lemma += p.lemma_checks
        refutations.extend(p.refutations)
    return SweepSummary(structures, level, char, lemma, tuple(refutations))


def sweep(
    corpus,
    grade_set,
    *,
    checks=ALL_CHECKS,
    sample: int | None = None,
    seed: int = 0,
    index_base: int = 0,
) -> SweepSummary:
    """Run the selected equivalence checks across a corpus of structures.

    The level criterion runs over every fuzzy subset drawn from grade_set
    (all of them when sample is None, otherwise `sample` seeded draws per
    structure), the other two over every non-empty crisp subset. Checks are
    pure and the summary is a plain merge, so partitioning the corpus and
    merging partial summaries in order reproduces this result exactly.
    A theorem-conforming run has an empty refutation list.
    """
    grades = _normalize_grades(grade_set)
    if ZERO not in grades or Fraction(1) not in grades:
        raise InputError("grade set must contain 0 and 1")
    unknown = [c for c in checks if c not in ALL_CHECKS]
    if unknown:
        raise InputError(f"unknown checks {unknown!r}")
    structures = level_checks = char_checks = lemma_checks = 0
    refutations: list[Refutation] = []
    for i, s in enumerate(corpus, start=index_base):
        structures += 1
        if "level" in checks:
            if sample is None:
                mus = enumerate_fuzzy_subsets(s.n, grades)
            else:
                mus = (
                    sample_fuzzy_subset(s.n, grades, seed + 1000003 * i + j)
                    for j in range(sample)
                )
            for mu in mus:
                rep = check_level_criterion(s, mu)
                level_checks += 1
                if not rep.consistent:
                    refutations.append(Refutation("level", i, s, mu, rep))
        if "char" in checks or "lemma" in checks:
            for mask in range(1, 1 << s.n):
                subset = frozenset(x for x in range(s.n) if mask >> x & 1)
                subject = tuple(sorted(subset))
                if "char" in checks:
                    rep = check_char_function_criterion(s, subset)
                    char_checks += 1
                    if not rep.consistent:
                        refutations.append(Refutation("char", i, s, subject, rep))
                if "lemma" in checks:
                    rep = check_lemma_char_function_interior(s, subset)
                    lemma_checks += 1
                    if not rep.consistent:
                        refutations.append(Refutation("lemma", i, s, subject, rep))
    return SweepSummary(
        structures, level_checks, char_checks, lemma_checks, tuple(refutations)
    )
