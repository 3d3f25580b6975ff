from fractions import Fraction

import pytest

from pogs import (
    EquivalenceReport,
    GeneratorConfig,
    InputError,
    OrdersMode,
    Witness,
    check_char_function_criterion,
    check_lemma_char_function_interior,
    check_level_criterion,
    extract_midpoint_witness,
    is_fuzzy_interior_ideal,
    iter_structures,
    merge_summaries,
    sweep,
)
from support import const_zero, left_zero

F = Fraction
GRADES = (F(0), F(1, 2), F(1))


def test_report_shape_is_enforced():
    assert EquivalenceReport(True, True).consistent
    assert EquivalenceReport(False, False).consistent
    assert not EquivalenceReport(True, False, Witness("x", ())).consistent
    with pytest.raises(ValueError):
        EquivalenceReport(True, False)
    with pytest.raises(ValueError):
        EquivalenceReport(True, True, Witness("x", ()))


def test_level_criterion_small_cases():
    s = const_zero()
    rep = check_level_criterion(s, (F(1), F(1, 2)))
    assert rep.consistent and rep.forward and rep.backward and rep.witness is None
    rep = check_level_criterion(s, (F(1, 2), F(1)))
    assert rep.consistent and not rep.forward and not rep.backward
    with pytest.raises(InputError):
        check_level_criterion(s, (F(0), F(0)))


def test_midpoint_witness_frozen_examples():
    w = extract_midpoint_witness(const_zero(), (F(1, 4), F(1)))
    assert (w.clause, w.elements, w.t0) == ("subsemigroup", (1, 0, 1), F(5, 8))
    assert w.cut_at_t0 == {1}
    w = extract_midpoint_witness(left_zero(), (F(1), F(0)))
    assert (w.clause, w.elements, w.t0) == ("interior", (1, 0, 0, 0, 0), F(1, 2))
    assert w.cut_at_t0 == {0}
    assert extract_midpoint_witness(const_zero(), (F(1), F(1, 4))) is None


def test_midpoint_ignores_order_only_failures():
    # antitone is the only broken clause here; no threshold exists for it
    s = const_zero(pairs=((1, 0),))
    mu = (F(1), F(1, 2))
    assert not is_fuzzy_interior_ideal(s, mu)
    assert extract_midpoint_witness(s, mu) is None


def test_char_function_criteria():
    s = const_zero(n=3)
    for a in ({0}, {2}, {0, 1}, {0, 1, 2}):
        assert check_char_function_criterion(s, a).consistent
        assert check_lemma_char_function_interior(s, a).consistent
    # {0, 1} separates the two claims: interior yes, invariant no
    rep = check_lemma_char_function_interior(s, {0, 1})
    assert rep.forward and rep.backward
    rep = check_char_function_criterion(s, {0, 1})
    assert not rep.forward and not rep.backward


def test_sweep_counts_small():
    disc = list(
        iter_structures(
            GeneratorConfig(max_n=2, max_m=1, orders=OrdersMode.DISCRETE_ONLY)
        )
    )
    su = sweep(disc, GRADES)
    assert (su.structures, su.level_checks, su.char_checks, su.lemma_checks) == (
        9,
        66,
        25,
        25,
    )
    assert su.refutations == ()
    full = list(iter_structures(GeneratorConfig(max_n=2, max_m=2)))
    su = sweep(full, GRADES)
    assert (su.structures, su.level_checks, su.char_checks, su.lemma_checks) == (
        56,
        436,
        164,
        164,
    )
    assert su.refutations == ()


def test_sweep_merge_matches_single_run():
    corpus = list(iter_structures(GeneratorConfig(max_n=2, max_m=1)))
    whole = sweep(corpus, GRADES)
    split = merge_summaries(
        [
            sweep(corpus[:10], GRADES, index_base=0),
            sweep(corpus[10:], GRADES, index_base=10),
        ]
    )
    assert split == whole


def test_sweep_check_selection():
    corpus = list(iter_structures(GeneratorConfig(max_n=2, max_m=1)))
    su = sweep(corpus, GRADES, checks=("char",))
    assert su.level_checks == 0 and su.lemma_checks == 0 and su.char_checks == 61


def test_sweep_sampled_is_deterministic():
    corpus = list(iter_structures(GeneratorConfig(max_n=2, max_m=1)))
    first = sweep(corpus, GRADES, sample=5, seed=3)
    again = sweep(corpus, GRADES, sample=5, seed=3)
    assert first == again
    assert first.level_checks == 5 * len(corpus)
    assert first.refutations == ()


def test_sweep_rejects_bad_inputs():
    corpus = list(iter_structures(GeneratorConfig(max_n=1, max_m=1)))
    with pytest.raises(InputError):
        sweep(corpus, (F(0), F(1, 2)))
    with pytest.raises(InputError):
        sweep(corpus, GRADES, checks=("level", "bogus"))
