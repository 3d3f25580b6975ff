import pytest

from pogs import (
    InputError,
    Witness,
    apply_to_subset,
    enumerate_automorphisms,
    is_automorphism,
    is_characteristic_interior_ideal,
)
from support import const_zero, left_zero


def test_left_zero_symmetry_depends_on_order():
    assert enumerate_automorphisms(left_zero()) == ((0, 1), (1, 0))
    # a chain breaks the swap
    assert enumerate_automorphisms(left_zero(pairs=((0, 1),))) == ((0, 1),)


def test_constant_table_fixes_the_absorbing_element():
    assert enumerate_automorphisms(const_zero()) == ((0, 1),)
    assert enumerate_automorphisms(const_zero(n=3)) == ((0, 1, 2), (0, 2, 1))


def test_is_automorphism_witnesses():
    v = is_automorphism(const_zero(), (1, 0))
    assert v.witness == Witness("operation", (0, 0, 0))
    v = is_automorphism(left_zero(pairs=((0, 1),)), (1, 0))
    assert v.witness == Witness("order", (0, 1))
    with pytest.raises(InputError):
        is_automorphism(left_zero(), (0, 0))
    with pytest.raises(InputError):
        is_automorphism(left_zero(), (0,))


def test_apply_to_subset():
    assert apply_to_subset((1, 0), {0}) == {1}
    assert apply_to_subset((0, 2, 1), {1, 2}) == {1, 2}
    assert apply_to_subset((0, 2, 1), {0, 1}) == {0, 2}


def test_automorphisms_form_a_group():
    for s in (left_zero(), left_zero(pairs=((0, 1),)), const_zero(n=3)):
        auts = enumerate_automorphisms(s)
        n = s.n
        assert tuple(range(n)) in auts
        for f in auts:
            assert tuple(f.index(i) for i in range(n)) in auts
            for g in auts:
                assert tuple(f[g[i]] for i in range(n)) in auts


def test_characteristic_interior_ideal():
    s = const_zero(n=3)
    assert is_characteristic_interior_ideal(s, {0})
    assert is_characteristic_interior_ideal(s, {0, 1, 2})
    # {0, 1} absorbs fine but the swap of 1 and 2 moves it
    v = is_characteristic_interior_ideal(s, {0, 1})
    assert v.witness == Witness("invariance", ((0, 2, 1), 1))


def test_characteristic_check_propagates_inner_failure():
    v = is_characteristic_interior_ideal(left_zero(), {0})
    assert v.witness == Witness("interior", (1, 0, 0, 0, 0))


def test_enumeration_is_cached():
    s = left_zero()
    assert enumerate_automorphisms(s) is enumerate_automorphisms(s)
