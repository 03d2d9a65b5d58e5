from typing import NamedTuple

from fincat.group._presentation import GroupPresentation
from fincat.group._smith import rank_and_torsion


class AbelianInvariants(NamedTuple):
    """Finitely generated abelian group Z^rank + sum of Z/t."""

    rank: int
    torsion: tuple

    def __str__(self):
        parts = [f"Z/{t}" for t in self.torsion]
        if self.rank:
            parts.insert(0, "Z" if self.rank == 1 else f"Z^{self.rank}")
        return " + ".join(parts) or "0"

    def to_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion), "group": str(self)}


def abelianization(P: GroupPresentation) -> AbelianInvariants:
    """Abelian invariants of a presented group.

    Parameters
    ----------
    P : GroupPresentation
        presentation

    Returns
    -------
    AbelianInvariants
        free rank and torsion invariant factors of the Smith normal form
        of the relator exponent matrix
    """
    if not P.relators:
        return AbelianInvariants(P.n_generators, ())
    rank, torsion = rank_and_torsion(P.relator_matrix())
    return AbelianInvariants(P.n_generators - rank, tuple(torsion))
