from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pogs import (
    InputError,
    Witness,
    apply_to_subset,
    characteristic_function,
    compose_with_automorphism,
    enumerate_automorphisms,
    enumerate_fuzzy_subsets,
    image_levels,
    is_fuzzy_characteristic_interior_ideal,
    is_fuzzy_interior_ideal,
    is_fuzzy_subsemigroup,
    make_fuzzy,
    t_cut,
)
from support import const_zero, left_zero

F = Fraction

grades = st.sampled_from(
    [F(0), F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(3, 4), F(1)]
)


def test_make_fuzzy_normalizes():
    assert make_fuzzy(["1/2", 0, F(1)]) == (F(1, 2), F(0), F(1))
    with pytest.raises(InputError):
        make_fuzzy([F(3, 2)])
    with pytest.raises(InputError):
        make_fuzzy([-1])
    with pytest.raises(InputError):
        make_fuzzy(["zebra"])


def test_cuts_and_levels():
    mu = (F(1, 4), F(1), F(1, 4), F(0))
    assert t_cut(mu, F(1, 4)) == {0, 1, 2}
    assert t_cut(mu, F(1, 2)) == {1}
    assert t_cut(mu, 0) == {0, 1, 2, 3}
    assert t_cut(mu, 1) == {1}
    assert image_levels(mu) == [F(0), F(1, 4), F(1)]
    with pytest.raises(InputError):
        t_cut(mu, F(3, 2))
    with pytest.raises(InputError):
        t_cut(mu, -1)


@given(st.lists(grades, min_size=1, max_size=5), grades, grades)
def test_cuts_are_nested(mu, s, t):
    lo, hi = min(s, t), max(s, t)
    assert t_cut(mu, hi) <= t_cut(mu, lo)


@given(st.lists(grades, min_size=1, max_size=5))
def test_every_nonempty_cut_arises_at_an_attained_level(mu):
    distinct = {t_cut(mu, lv) for lv in [F(0)] + image_levels(mu)}
    for q in range(1, 9):
        for p in range(q + 1):
            cut = t_cut(mu, F(p, q))
            assert not cut or cut in distinct


def test_fuzzy_subsemigroup():
    s = const_zero()
    assert is_fuzzy_subsemigroup(s, (F(1), F(1, 2)))
    v = is_fuzzy_subsemigroup(s, (F(1, 4), F(1)))
    assert v.witness == Witness("subsemigroup", (1, 0, 1, F(1, 4), F(1)))
    with pytest.raises(InputError):
        is_fuzzy_subsemigroup(s, (F(0), F(0)))
    with pytest.raises(InputError):
        is_fuzzy_subsemigroup(s, (F(1),))


def test_fuzzy_interior_ideal_clause_order():
    v = is_fuzzy_interior_ideal(left_zero(), (F(1), F(1, 2)))
    assert v.witness == Witness("interior", (1, 0, 0, 0, 0, F(1, 2), F(1)))
    # product clauses fine, antitone broken: 1 sits below 0 but is graded lower
    v = is_fuzzy_interior_ideal(const_zero(pairs=((1, 0),)), (F(1), F(1, 2)))
    assert v.witness == Witness("antitone", (1, 0, F(1, 2), F(1)))
    assert is_fuzzy_interior_ideal(const_zero(pairs=((0, 1),)), (F(1), F(1, 2)))


def test_characteristic_function():
    assert characteristic_function(3, {0, 2}) == (F(1), F(0), F(1))
    with pytest.raises(InputError):
        characteristic_function(3, set())
    with pytest.raises(InputError):
        characteristic_function(2, {5})


def test_compose_with_automorphism():
    mu = (F(1), F(1, 2), F(0))
    assert compose_with_automorphism(mu, (2, 0, 1)) == (F(0), F(1), F(1, 2))
    with pytest.raises(InputError):
        compose_with_automorphism(mu, (0, 1))


def test_fuzzy_invariance():
    s = const_zero(n=3)
    assert is_fuzzy_characteristic_interior_ideal(s, (F(1), F(1, 2), F(1, 2)))
    v = is_fuzzy_characteristic_interior_ideal(s, (F(1), F(1, 2), F(0)))
    assert v.witness == Witness("invariance", ((0, 2, 1), 1, F(1, 2), F(0)))


def test_grade_invariance_matches_cut_invariance(small_corpus):
    # holding every grade fixed under f is the same as holding every cut fixed
    for s in small_corpus:
        auts = enumerate_automorphisms(s)
        for mu in enumerate_fuzzy_subsets(s.n, (F(0), F(1, 2), F(1))):
            by_grades = all(
                compose_with_automorphism(mu, f) == mu for f in auts
            )
            by_cuts = all(
                apply_to_subset(f, t_cut(mu, lv)) == t_cut(mu, lv)
                for f in auts
                for lv in image_levels(mu)
            )
            assert by_grades == by_cuts
