"""Automorphism groups, Lascar subgroups and their comparison with the
fundamental group."""

from fincat.lascar._lascar import (
    automorphism_group,
    lascar_group,
    LascarResult,
    lst_subgroup,
)
from fincat.lascar._phi import (
    basepoint_invariance,
    inverse_map,
    phi_map,
    PhiMap,
    verify_main_theorem,
)


__all__ = [
    "automorphism_group",
    "lascar_group",
    "LascarResult",
    "lst_subgroup",
    "basepoint_invariance",
    "inverse_map",
    "phi_map",
    "PhiMap",
    "verify_main_theorem",
]
