"""Finite partially ordered Gamma-semigroups and their fuzzy interior ideals."""

from .automorphisms import (
    Automorphism,
    apply_to_subset,
    enumerate_automorphisms,
    is_automorphism,
    is_characteristic_interior_ideal,
)
from .fuzzy import (
    FuzzySubset,
    Grade,
    characteristic_function,
    compose_with_automorphism,
    image_levels,
    is_fuzzy_characteristic_interior_ideal,
    is_fuzzy_interior_ideal,
    is_fuzzy_subsemigroup,
    make_fuzzy,
    t_cut,
)
from .generator import (
    GeneratorConfig,
    OrdersMode,
    enumerate_compatible_orders,
    enumerate_fuzzy_subsets,
    enumerate_gamma_semigroups,
    iter_structures,
    sample_fuzzy_subset,
)
from .ideals import (
    CrispSubset,
    downward_closure,
    enumerate_interior_ideals,
    is_interior_ideal,
    is_subsemigroup,
)
from .structures import (
    GammaSemigroup,
    InputError,
    PartialOrder,
    PoGammaSemigroup,
    ValidationError,
    Verdict,
    Witness,
    build_structure,
    validate_compatibility,
    validate_gamma_semigroup,
    validate_partial_order,
)
from .theorems import (
    EquivalenceReport,
    MidpointWitness,
    Refutation,
    SweepSummary,
    check_char_function_criterion,
    check_lemma_char_function_interior,
    check_level_criterion,
    extract_midpoint_witness,
    merge_summaries,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "Automorphism",
    "CrispSubset",
    "EquivalenceReport",
    "FuzzySubset",
    "GammaSemigroup",
    "GeneratorConfig",
    "Grade",
    "InputError",
    "MidpointWitness",
    "OrdersMode",
    "PartialOrder",
    "PoGammaSemigroup",
    "Refutation",
    "SweepSummary",
    "ValidationError",
    "Verdict",
    "Witness",
    "apply_to_subset",
    "build_structure",
    "characteristic_function",
    "check_char_function_criterion",
    "check_lemma_char_function_interior",
    "check_level_criterion",
    "compose_with_automorphism",
    "downward_closure",
    "enumerate_automorphisms",
    "enumerate_compatible_orders",
    "enumerate_fuzzy_subsets",
    "enumerate_gamma_semigroups",
    "enumerate_interior_ideals",
    "extract_midpoint_witness",
    "image_levels",
    "is_automorphism",
    "is_characteristic_interior_ideal",
    "is_fuzzy_characteristic_interior_ideal",
    "is_fuzzy_interior_ideal",
    "is_fuzzy_subsemigroup",
    "is_interior_ideal",
    "is_subsemigroup",
    "iter_structures",
    "make_fuzzy",
    "merge_summaries",
    "sample_fuzzy_subset",
    "sweep",
    "t_cut",
    "validate_compatibility",
    "validate_gamma_semigroup",
    "validate_partial_order",
]
