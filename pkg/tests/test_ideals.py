import pytest

from pogs import (
    InputError,
    Witness,
    downward_closure,
    enumerate_interior_ideals,
    is_interior_ideal,
    is_subsemigroup,
)
from support import const_zero, left_zero


def test_subsemigroup_closure():
    s = left_zero()
    for a in ({0}, {1}, {0, 1}):
        assert is_subsemigroup(s, a)
    v = is_subsemigroup(const_zero(), {1})
    assert v.witness == Witness("subsemigroup", (1, 0, 1))


def test_subset_normalization():
    s = left_zero()
    with pytest.raises(InputError):
        is_subsemigroup(s, set())
    with pytest.raises(InputError):
        is_subsemigroup(s, {2})
    with pytest.raises(InputError):
        is_subsemigroup(s, {True})
    # duplicates collapse, any iterable goes
    assert is_subsemigroup(s, [0, 0, 1])


def test_interior_ideal_clause_order():
    # {0} under the left-zero table is closed but not absorbing: 1*0*0 = 1
    v = is_interior_ideal(left_zero(), {0})
    assert v.witness == Witness("interior", (1, 0, 0, 0, 0))
    # absorbing holds for the constant table; an order with 1 below 0 then
    # trips downward closure
    v = is_interior_ideal(const_zero(pairs=((1, 0),)), {0})
    assert v.witness == Witness("downward", (0, 1))
    assert is_interior_ideal(const_zero(pairs=((0, 1),)), {0})


def test_interior_ideal_enumeration():
    assert [sorted(a) for a in enumerate_interior_ideals(const_zero())] == [
        [0],
        [0, 1],
    ]
    assert [sorted(a) for a in enumerate_interior_ideals(left_zero())] == [[0, 1]]
    # an order with 1 below 0 kills the singleton
    s = const_zero(pairs=((1, 0),))
    assert [sorted(a) for a in enumerate_interior_ideals(s)] == [[0, 1]]


def test_full_carrier_is_always_an_interior_ideal(small_corpus):
    for s in small_corpus:
        assert is_interior_ideal(s, range(s.n))


def test_downward_closure():
    s = const_zero(pairs=((0, 1),))
    assert downward_closure(s, {1}) == {0, 1}
    assert downward_closure(s, {0}) == {0}
    assert downward_closure(s, set()) == set()
    with pytest.raises(InputError):
        downward_closure(s, {7})


def test_downward_closure_idempotent():
    s = const_zero(pairs=((0, 1),))
    closed = downward_closure(s, {1})
    assert downward_closure(s, closed) == closed
