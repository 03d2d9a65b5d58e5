"""Nerves, homology and fundamental groups of finite categories."""

from fincat.group import abelianization
from fincat.homotopy._certify import (
    asphericity_shadow,
    homotopy_equivalence_certify,
    quillen_a_certify,
)
from fincat.homotopy._chain import (
    ChainComplex,
    homology_from_boundaries,
    HomologyResult,
    nerve_chain_complex,
    nerve_homology,
)
from fincat.homotopy._fundamental import (
    change_basepoint,
    fundamental_group,
    FundamentalGroup,
    induced_pi1_hom,
    pi1_presentation,
)
from fincat.homotopy._nerve import nerve_truncated, TruncatedNerve


__all__ = [
    "abelianization",
    "asphericity_shadow",
    "homotopy_equivalence_certify",
    "quillen_a_certify",
    "ChainComplex",
    "homology_from_boundaries",
    "HomologyResult",
    "nerve_chain_complex",
    "nerve_homology",
    "change_basepoint",
    "fundamental_group",
    "FundamentalGroup",
    "induced_pi1_hom",
    "pi1_presentation",
    "nerve_truncated",
    "TruncatedNerve",
]
