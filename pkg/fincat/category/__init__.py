"""Finite categories, functors and exhaustive property deciders."""

from fincat.category._category import FiniteCategory, validate_category
from fincat.category._derive import (
    derive_category,
    Fiber,
    fiber_category,
    opposite_category,
    opposite_functor,
    Opposite,
    pair_id,
    Product,
    product_category,
    projection_functor,
    Slice,
    slice_category,
)
from fincat.category._functor import (
    compose_functors,
    constant_functor,
    Functor,
    identity_functor,
    identity_transformation,
    NaturalTransformation,
)
from fincat.category._functor_properties import (
    check_functor_property,
    check_functorial_joint_embedding,
    FUNCTOR_PROPERTIES,
)
from fincat.category._monster import automorphism_indices, monster_report
from fincat.category._properties import (
    all_spans,
    check_category_property,
    contractibility_certificate,
    find_amalgam,
    PROPERTIES,
)
from fincat.category._report import PropertyReport, Verdict


__all__ = [
    "FiniteCategory",
    "validate_category",
    "derive_category",
    "Opposite",
    "Product",
    "Slice",
    "Fiber",
    "opposite_category",
    "product_category",
    "slice_category",
    "fiber_category",
    "projection_functor",
    "opposite_functor",
    "pair_id",
    "Functor",
    "NaturalTransformation",
    "identity_functor",
    "compose_functors",
    "constant_functor",
    "identity_transformation",
    "check_category_property",
    "contractibility_certificate",
    "all_spans",
    "find_amalgam",
    "PROPERTIES",
    "check_functor_property",
    "check_functorial_joint_embedding",
    "FUNCTOR_PROPERTIES",
    "automorphism_indices",
    "monster_report",
    "PropertyReport",
    "Verdict",
]
