"""Category-building: idempotent splitting, formal amalgams, posets and
simplicial complexes."""

from fincat.construction._amalgamation import (
    adjoin_amalgamation_step,
    ALL_SPANS,
    amalgam_id,
    AmalgamationStep,
)
from fincat.construction._complex import (
    barycentric_subdivide,
    boundary_complex,
    complex_category,
    face_label,
    face_poset,
    order_complex,
    simplex,
    simplicial_homology,
    SimplicialComplex,
)
from fincat.construction._iterate import iterate_construction, Stage
from fincat.construction._karoubi import idempotents, karoubi_envelope
from fincat.construction._poset import (
    boolean_lattice,
    closure_adjunction,
    leq_id,
    Poset,
)


__all__ = [
    "adjoin_amalgamation_step",
    "ALL_SPANS",
    "amalgam_id",
    "AmalgamationStep",
    "barycentric_subdivide",
    "boundary_complex",
    "complex_category",
    "face_label",
    "face_poset",
    "order_complex",
    "simplex",
    "simplicial_homology",
    "SimplicialComplex",
    "iterate_construction",
    "Stage",
    "idempotents",
    "karoubi_envelope",
    "boolean_lattice",
    "closure_adjunction",
    "leq_id",
    "Poset",
]
