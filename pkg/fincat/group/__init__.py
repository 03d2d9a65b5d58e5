"""Finite groups: presentations, tables, Smith normal form and coset
enumeration."""

from fincat.group._abelian import abelianization, AbelianInvariants
from fincat.group._coset import coset_enumeration, EnumeratedGroup
from fincat.group._isomorphism import find_isomorphism
from fincat.group._presentation import (
    canonical_relator,
    cyclic_reduce,
    free_reduce,
    GroupPresentation,
    invert,
    PresentationHomomorphism,
)
from fincat.group._smith import rank_and_torsion, smith_invariants
from fincat.group._table import FiniteGroupTable
from fincat.group._tietze import tietze_simplify


__all__ = [
    "abelianization",
    "AbelianInvariants",
    "coset_enumeration",
    "EnumeratedGroup",
    "find_isomorphism",
    "canonical_relator",
    "cyclic_reduce",
    "free_reduce",
    "GroupPresentation",
    "invert",
    "PresentationHomomorphism",
    "rank_and_torsion",
    "smith_invariants",
    "FiniteGroupTable",
    "tietze_simplify",
]
