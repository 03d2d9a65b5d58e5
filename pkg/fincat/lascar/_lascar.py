import logging

import numpy as np

from fincat.category import automorphism_indices, FiniteCategory
from fincat.group import FiniteGroupTable


logger = logging.getLogger(__name__)


def automorphism_group(C: FiniteCategory, U: str) -> FiniteGroupTable:
    """Automorphisms of U under composition.

    Element ``k`` is the k-th invertible endomorphism of U in id order and
    ``table[a, b]`` is the composite ``a . b``.
    """
    u = C.object_index(U)
    autos = automorphism_indices(C, u)
    position = np.full(C.n_morphisms, -1, dtype=np.int64)
    position[autos] = np.arange(len(autos))
    table = position[C.table[np.ix_(autos, autos)]]
    return FiniteGroupTable(
        [C.morphisms[a] for a in autos], table,
        identity=int(position[C.identity[u]]), validate=False)


class LascarResult(object):
    """Lascar subgroup of ``Aut(U)`` and, once computed, the quotient.

    Attributes
    ----------
    category : FiniteCategory
        ambient category
    small : tuple of str
        objects of the full subcategory of small objects
    basepoint : str
        the object U
    aut : FiniteGroupTable
        automorphism group of U
    lst_generators : list of dict
        ``{"automorphism", "object", "morphism"}``: an automorphism
        fixing the morphism ``object -> U``
    lst : np.ndarray
        sorted indices of the generated subgroup in ``aut``
    normality_verified : bool
        whether ``lst`` is normal in ``aut``
    closed : bool
        whether ``lst`` was replaced by its normal closure
    quotient : FiniteGroupTable or None
        the Lascar group
    coset_of : np.ndarray or None
        coset index of every element of ``aut``
    """

    def __init__(self, category, small, basepoint, aut, lst_generators, lst,
                 normality_verified):
        self.category = category
        self.small = tuple(small)
        self.basepoint = basepoint
        self.aut = aut
        self.lst_generators = list(lst_generators)
        self.lst = lst
        self.normality_verified = normality_verified
        self.closed = False
        self.quotient = None
        self.coset_of = None

    @property
    def lst_order(self) -> int:
        return len(self.lst)

    def to_dict(self) -> dict:
        out = {
            "basepoint": self.basepoint,
            "small": list(self.small),
            "aut_order": self.aut.order,
            "lst_order": self.lst_order,
            "lst_generators": self.lst_generators,
            "normality_verified": self.normality_verified,
        }
        if self.closed:
            out["normal_closure"] = True
        if self.quotient is not None:
            out["gal_l"] = self.quotient.to_dict()
            out["gal_l"]["abelian_invariants"] = self.quotient.abelian_invariants()
        return out


def lst_subgroup(C: FiniteCategory, C0, U: str) -> LascarResult:
    """Subgroup of ``Aut(U)`` generated by automorphisms fixing a morphism
    from a small object.

    Parameters
    ----------
    C : FiniteCategory
        ambient category
    C0 : iterable of str
        small objects
    U : str
        basepoint

    Returns
    -------
    LascarResult
        without quotient
    """
    aut = automorphism_group(C, U)
    u = C.object_index(U)
    autos = automorphism_indices(C, u)
    small = sorted(set(C0))
    witnesses = {}
    for M in small:
        homs = C.hom_indices(C.object_index(M), u)
        if not len(homs):
            continue
        fixes = C.table[np.ix_(autos, homs)] == homs[None, :]
        for a in np.flatnonzero(fixes.any(axis=1)):
            if a == aut.identity or a in witnesses:
                continue
            f = homs[np.argmax(fixes[a])]
            witnesses[int(a)] = {
                "automorphism": aut.elements[a],
                "object": M,
                "morphism": C.morphisms[f],
            }
    generators = sorted(witnesses)
    lst = aut.generate(generators)
    normal = aut.normality_witness(lst) is None
    logger.debug(
        "Lst(%s, %s): %d fixing automorphisms generate %d of %d",
        C.name, U, len(generators), len(lst), aut.order)
    return LascarResult(
        C, small, U, aut, [witnesses[a] for a in generators], lst, normal)


def lascar_group(C: FiniteCategory, C0, U: str, normal_closure: bool = False) -> LascarResult:
    """Quotient of ``Aut(U)`` by the Lascar subgroup.

    Parameters
    ----------
    C : FiniteCategory
        ambient category
    C0 : iterable of str
        small objects
    U : str
        basepoint
    normal_closure : bool, optional
        quotient by the normal closure when the subgroup is not normal
        (the default is False)

    Returns
    -------
    LascarResult

    Raises
    ------
    NotNormal
        the subgroup is not normal and ``normal_closure`` is False
    """
    result = lst_subgroup(C, C0, U)
    if not result.normality_verified and normal_closure:
        result.lst = result.aut.normal_closure(result.lst)
        result.closed = True
    result.quotient, result.coset_of = result.aut.quotient(result.lst)
    return result
