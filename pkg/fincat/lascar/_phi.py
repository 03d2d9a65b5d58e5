import logging

import numpy as np

from fincat.category import (
    FiniteCategory,
    Functor,
    monster_report,
    PropertyReport,
    Verdict,
)
from fincat.corpus import classifying_category
from fincat.errors import (
    EnumerationFailed,
    InvalidFunctor,
    NotNormal,
    ResourceLimit,
    WellDefinednessFailure,
)
from fincat.group import find_isomorphism
from fincat.homotopy import fundamental_group, FundamentalGroup
from fincat.lascar._lascar import lascar_group, LascarResult


logger = logging.getLogger(__name__)


class PhiMap(object):
    """Canonical map from the Lascar group to the fundamental group.

    Attributes
    ----------
    lascar : LascarResult
        source, with quotient
    pi1 : FundamentalGroup
        target at the same basepoint
    representatives : list of str
        automorphism representing each element of the Lascar group
    words : list of str
        image of each representative in the simplified presentation
    images : np.ndarray or None
        image of each Lascar group element in the enumerated fundamental
        group, None when it did not enumerate
    well_defined : bool or None
        every element of a coset has the same image; None without
        ``images``
    """

    def __init__(self, lascar: LascarResult, pi1: FundamentalGroup, representatives,
                 words, images=None, well_defined=None):
        self.lascar = lascar
        self.pi1 = pi1
        self.representatives = list(representatives)
        self.words = list(words)
        self.images = images
        self.well_defined = well_defined

    def is_homomorphism(self) -> bool:
        Q, G = self.lascar.quotient, self.pi1.group
        left = self.images[Q.table]
        right = G.table[self.images[:, None], self.images[None, :]]
        return bool((left == right).all())

    def is_injective(self) -> bool:
        return len(np.unique(self.images)) == len(self.images)

    def is_surjective(self) -> bool:
        return len(np.unique(self.images)) == self.pi1.group.order

    def is_isomorphism(self) -> bool:
        return (
            self.images is not None
            and bool(self.well_defined)
            and self.is_homomorphism()
            and self.is_injective()
            and self.is_surjective())

    def to_dict(self) -> dict:
        out = {
            "representatives": self.representatives,
            "words": self.words,
            "well_defined": self.well_defined,
        }
        if self.images is not None:
            out["images"] = [self.pi1.group.elements[k] for k in self.images]
            out["homomorphism"] = self.is_homomorphism()
            out["injective"] = self.is_injective()
            out["surjective"] = self.is_surjective()
        return out


def _automorphism_word(C: FiniteCategory, alpha: str) -> list:
    return [] if C.is_identity(alpha) else [(alpha, 1)]


def phi_map(
    C: FiniteCategory,
    C0,
    U: str,
    max_cosets: int = None,
    allow_words: bool = False,
    lascar: LascarResult = None,
    pi1: FundamentalGroup = None,
) -> PhiMap:
    """Send each Lascar class ``[a]`` to the loop ``a`` at U.

    Parameters
    ----------
    C : FiniteCategory
        ambient category
    C0 : iterable of str
        small objects
    U : str
        basepoint
    max_cosets : int, optional
        coset budget for the fundamental group
    allow_words : bool, optional
        return the map on words when the fundamental group does not
        enumerate instead of raising (the default is False)
    lascar, pi1 : optional
        precomputed Lascar group and fundamental group

    Returns
    -------
    PhiMap

    Raises
    ------
    EnumerationFailed
        the fundamental group did not enumerate and ``allow_words`` is False
    WellDefinednessFailure
        two automorphisms in one Lascar class have different images
    """
    if lascar is None:
        lascar = lascar_group(C, C0, U)
    if pi1 is None:
        pi1 = fundamental_group(C, U, max_cosets=max_cosets)
    aut, Q = lascar.aut, lascar.quotient
    representatives = list(Q.elements)
    words = [
        pi1.simplified.format_word(
            pi1.simplified.rewrite(_automorphism_word(C, alpha)))
        for alpha in representatives]
    if pi1.group is None:
        if not allow_words:
            raise EnumerationFailed(
                f"fundamental group of {C.name} at {U} did not enumerate: {pi1.limit}")
        return PhiMap(lascar, pi1, representatives, words)

    loops = np.array(
        [pi1.element(_automorphism_word(C, alpha)) for alpha in aut.elements],
        dtype=np.int64)
    images = np.empty(Q.order, dtype=np.int64)
    for k, alpha in enumerate(representatives):
        images[k] = loops[aut.elements.index(alpha)]
    for generator in lascar.lst_generators:
        a = aut.elements.index(generator["automorphism"])
        if loops[a] != pi1.group.identity:
            raise WellDefinednessFailure(
                "a fixing automorphism is a nontrivial loop",
                {"generator": generator, "image": pi1.group.elements[loops[a]]})
    clash = np.flatnonzero(images[lascar.coset_of] != loops)
    if len(clash):
        a = int(clash[0])
        raise WellDefinednessFailure(
            "automorphisms in one Lascar class have different images",
            {"automorphism": aut.elements[a],
             "representative": representatives[lascar.coset_of[a]]})
    return PhiMap(lascar, pi1, representatives, words, images, True)


def inverse_map(C: FiniteCategory, C0, U: str, lascar: LascarResult = None) -> Functor:
    """Functor from the small objects to the Lascar group as a one-object
    category.

    Chooses an embedding ``i_M: M -> U`` for every small M and sends
    ``f: M -> N`` to the class of an automorphism ``a`` with
    ``a i_M = i_N f``.

    Raises
    ------
    WellDefinednessFailure
        some small object does not embed or no such automorphism exists
    InvalidFunctor
        the assignment is not a functor
    """
    if lascar is None:
        lascar = lascar_group(C, C0, U)
    aut, Q = lascar.aut, lascar.quotient
    autos = np.array([C.morphism_index(a) for a in aut.elements], dtype=np.int64)
    u = C.object_index(U)
    small = C.full_subcategory(lascar.small, name="C0")
    embedding = {}
    for M in small.objects:
        homs = C.hom_indices(C.object_index(M), u)
        if not len(homs):
            raise WellDefinednessFailure(
                f"{M} does not embed into {U}", {"object": M})
        embedding[M] = int(homs[0])
    target = classifying_category(Q, name="Gal_L")
    on_morphisms = {}
    for f in small.morphisms:
        M, N = small.source(f), small.target(f)
        wanted = C.table[embedding[N], C.morphism_index(f)]
        hits = np.flatnonzero(C.table[autos, embedding[M]] == wanted)
        if not len(hits):
            raise WellDefinednessFailure(
                "no automorphism carries one embedding to the other",
                {"morphism": f, "source": M, "target": N})
        on_morphisms[f] = Q.elements[lascar.coset_of[hits[0]]]
    return Functor(
        small, target, {M: target.objects[0] for M in small.objects},
        on_morphisms, name="Psi")


def _hypotheses(C, C0, U):
    universal, homogeneous = monster_report(C, C0, U)
    return universal, homogeneous, universal.is_holds and homogeneous.is_holds


def verify_main_theorem(
    C: FiniteCategory,
    C0,
    U: str,
    max_cosets: int = None,
) -> PropertyReport:
    """Check that the canonical map from the Lascar group to the
    fundamental group is an isomorphism.

    Hypotheses (universality and strong homogeneity of U) are checked
    first; both groups are computed and reported regardless.

    Returns
    -------
    PropertyReport
        HypothesesNotMet with the failed hypothesis, Holds when the map is
        a bijective homomorphism, Fails otherwise
        (including when Lst is not normal, with the conjugation as witness)

    Raises
    ------
    EnumerationFailed
        the fundamental group did not enumerate within budget
    """
    name = "MainTheorem"
    universal, homogeneous, ok = _hypotheses(C, C0, U)
    try:
        lascar = lascar_group(C, C0, U, normal_closure=not ok)
    except NotNormal as error:
        return PropertyReport.fails(
            name, error.witness,
            universal=universal.to_dict(), homogeneous=homogeneous.to_dict())
    pi1 = fundamental_group(C, U, max_cosets=max_cosets)
    details = {
        "universal": universal.to_dict(),
        "homogeneous": homogeneous.to_dict(),
        "lascar": lascar.to_dict(),
        "pi1": pi1.to_dict(),
    }
    if not ok:
        failed = universal if not universal.is_holds else homogeneous
        return PropertyReport(name, Verdict.HYPOTHESES_NOT_MET, failed.witness, details)
    phi = phi_map(C, C0, U, lascar=lascar, pi1=pi1)
    details["phi"] = phi.to_dict()
    try:
        psi = inverse_map(C, C0, U, lascar=lascar)
        details["inverse"] = {"functor": psi.name, "valid": True}
    except (WellDefinednessFailure, InvalidFunctor) as error:
        details["inverse"] = {"valid": False, "error": str(error)}
    logger.debug(
        "main theorem at %s: Gal_L order %d, pi1 order %d",
        U, lascar.quotient.order, pi1.order)
    if phi.is_isomorphism():
        return PropertyReport.holds(
            name, {"gal_l_order": lascar.quotient.order, "pi1_order": pi1.order},
            **details)
    witness = {
        "homomorphism": phi.is_homomorphism(),
        "injective": phi.is_injective(),
        "surjective": phi.is_surjective(),
    }
    return PropertyReport.fails(name, witness, **details)


def basepoint_invariance(
    C: FiniteCategory,
    C0,
    U: str,
    U2: str,
    max_order: int = None,
) -> PropertyReport:
    """Compare the Lascar groups at two basepoints.

    Holds when both basepoints pass the monster checks and the two groups
    are isomorphic; HypothesesNotMet when a basepoint fails them; Unknown
    when the isomorphism search runs out of budget.
    """
    name = "BasepointInvariance"
    checks = {}
    for point in (U, U2):
        universal, homogeneous, ok = _hypotheses(C, C0, point)
        checks[point] = {"universal": universal.verdict.value,
                         "homogeneous": homogeneous.verdict.value}
        if not ok:
            return PropertyReport(
                name, Verdict.HYPOTHESES_NOT_MET, {"basepoint": point}, checks)
    G, H = (lascar_group(C, C0, point).quotient for point in (U, U2))
    details = {
        "orders": [G.order, H.order],
        "abelian_invariants": [G.abelian_invariants(), H.abelian_invariants()],
    }
    if G.order != H.order or details["abelian_invariants"][0] != details["abelian_invariants"][1]:
        return PropertyReport.fails(name, details)
    try:
        iso = find_isomorphism(G, H, max_order=max_order)
    except ResourceLimit as error:
        return PropertyReport.exhausted(name, error)
    if iso is None:
        return PropertyReport.fails(name, dict(details, isomorphic=False))
    return PropertyReport.holds(
        name, {"isomorphism": {G.elements[a]: H.elements[b] for a, b in enumerate(iso)}},
        **details)
