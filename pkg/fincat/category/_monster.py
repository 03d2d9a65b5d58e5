import numpy as np

from fincat.category._category import FiniteCategory
from fincat.category._report import PropertyReport


def automorphism_indices(C: FiniteCategory, u: int) -> np.ndarray:
    """Invertible endomorphisms of object index u, in id order."""
    ends = C.hom_indices(u, u)
    return ends[C.inverse_indices()[ends] >= 0]


def monster_report(C: FiniteCategory, C0, U: str) -> tuple:
    """Check that U is universal and strongly homogeneous for C0.

    Parameters
    ----------
    C : FiniteCategory
        ambient category
    C0 : iterable of str
        object ids of the full subcategory of small objects
    U : str
        candidate monster object

    Returns
    -------
    universal : PropertyReport
        every M in C0 maps into U
    homogeneous : PropertyReport
        for every M in C0, Aut(U) acts transitively on Hom(M, U)
    """
    u = C.object_index(U)
    small = sorted(set(C0))
    indices = [C.object_index(M) for M in small]

    universal = PropertyReport.holds("Universal")
    for M, m in zip(small, indices):
        if not len(C.hom_indices(m, u)):
            universal = PropertyReport.fails(
                "Universal", {"object": M, "reason": f"Hom({M}, {U}) is empty"})
            break

    autos = automorphism_indices(C, u)
    homogeneous = PropertyReport.holds(
        "StronglyHomogeneous", automorphisms=len(autos))
    for M, m in zip(small, indices):
        homs = C.hom_indices(m, u)
        if not len(homs):
            continue
        orbit = C.table[autos, homs[0]]
        outside = np.setdiff1d(homs, orbit)
        if len(outside):
            homogeneous = PropertyReport.fails(
                "StronglyHomogeneous",
                {"object": M,
                 "f": C.morphisms[homs[0]],
                 "g": C.morphisms[outside[0]]})
            break
    return universal, homogeneous
