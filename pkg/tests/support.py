"""Tiny structure builders shared across the test modules."""

from pogs import GammaSemigroup, PartialOrder, build_structure


def table(n, m, rule):
    return tuple(
        tuple(tuple(rule(a, g, b) for b in range(n)) for g in range(m))
        for a in range(n)
    )


def make(n, m, rule, pairs=()):
    return build_structure(
        GammaSemigroup(n, m, table(n, m, rule)), PartialOrder.from_pairs(n, pairs)
    )


def left_zero(pairs=()):
    # x g y = x for two elements
    return make(2, 1, lambda a, g, b: a, pairs)


def const_zero(n=2, pairs=()):
    # every product collapses to element 0
    return make(n, 1, lambda a, g, b: 0, pairs)
