import logging

import numpy as np

from fincat.category._category import FiniteCategory
from fincat.category._derive import (
    opposite_functor,
    product_category,
    projection_functor,
)
from fincat.category._functor import Functor, NaturalTransformation
from fincat.category._report import PropertyReport
from fincat.config import StepBudget
from fincat.errors import ResourceLimit, ShapeMismatch


logger = logging.getLogger(__name__)

FUNCTOR_PROPERTIES = ("Valid", "Fibration", "Opfibration")


def _is_cartesian(F: Functor, phi: int, f: int, budget: StepBudget) -> bool:
    """Every (psi, g) with f . g = F(psi) factors uniquely through phi."""
    dom, cod = F.dom, F.cod
    e, lifted = dom.tgt[phi], dom.src[phi]
    d = cod.src[f]
    for x in range(dom.n_objects):
        via = dom.hom_indices(x, lifted)
        psis = dom.hom_indices(x, e)
        gs = cod.hom_indices(F.object_map[x], d)
        budget.tick(len(psis) * len(gs) + len(via) + 1)
        expected = (
            cod.table[f, gs][None, :] == F.morphism_map[psis][:, None]).sum()
        if len(via) != expected:
            return False
        pairs = dom.table[phi, via] * cod.n_morphisms + F.morphism_map[via]
        if len(np.unique(pairs)) != len(via):
            return False
    return True


def _fibration(F: Functor, budget: StepBudget, name="Fibration"):
    dom, cod = F.dom, F.cod
    for e in range(dom.n_objects):
        for f in cod.in_indices(F.object_map[e]):
            candidates = dom.in_indices(e)
            candidates = candidates[F.morphism_map[candidates] == f]
            budget.tick(len(candidates) + 1)
            if not any(_is_cartesian(F, phi, f, budget) for phi in candidates):
                return PropertyReport.fails(
                    name,
                    {"morphism": cod.morphisms[f],
                     "object": dom.objects[e],
                     "reason": "no cartesian lift" if len(candidates) else "no lift"})
    return PropertyReport.holds(name)


def check_functor_property(F: Functor, prop: str, max_steps: int = None) -> PropertyReport:
    """Decide whether F is a functor, a fibration or an opfibration.

    Parameters
    ----------
    F : Functor
        functor between validated categories
    prop : str
        "Valid", "Fibration" or "Opfibration"
    max_steps : int, optional
        search budget, by default ``config.max_steps``

    Returns
    -------
    PropertyReport
        verdict with the offending law or the morphism without a lift
    """
    if prop not in FUNCTOR_PROPERTIES:
        raise ValueError(
            f"unknown property {prop!r}, expected one of {FUNCTOR_PROPERTIES}")
    if prop == "Valid":
        witness = F.find_violation()
        if witness is None:
            return PropertyReport.holds("Valid")
        return PropertyReport.fails("Valid", witness)
    F.validate()
    budget = StepBudget(max_steps)
    try:
        if prop == "Fibration":
            return _fibration(F, budget)
        # cocartesian lifts of F are cartesian lifts of F^op
        return _fibration(opposite_functor(F), budget, name="Opfibration")
    except ResourceLimit as e:
        logger.warning("%s check of %s stopped after %d steps", prop, F.name, budget.used)
        return PropertyReport.exhausted(prop, e)


def check_functorial_joint_embedding(
    C: FiniteCategory,
    F: Functor,
    iota1: NaturalTransformation,
    iota2: NaturalTransformation,
) -> PropertyReport:
    """Check a functorial joint embedding ``F: C x C -> C``.

    Parameters
    ----------
    C : FiniteCategory
        nonempty category
    F : Functor
        functor from ``C x C`` to C
    iota1, iota2 : NaturalTransformation
        transformations from the two projections to F

    Returns
    -------
    PropertyReport
        Holds with a contractibility certificate, or Fails with the broken
        naturality square
    """
    name = "FunctorialJointEmbedding"
    if not C.n_objects:
        return PropertyReport.fails(name, {"reason": "empty category"})
    square = product_category(C, C)
    if F.dom != square or F.cod != C:
        raise ShapeMismatch(
            "F must be a functor C x C -> C", {"functor": F.name})
    for which, iota in ((1, iota1), (2, iota2)):
        projection = projection_functor(C, C, which, product=square)
        if not (iota.source.agrees_with(projection) and iota.target.agrees_with(F)):
            raise ShapeMismatch(
                f"iota{which} must run from projection {which} to F",
                {"transformation": iota.name})
    for label, iota in (("iota1", iota1), ("iota2", iota2)):
        witness = iota.find_violation()
        if witness is not None:
            return PropertyReport.fails(
                name, {"transformation": label, "square": witness})
    return PropertyReport.holds(
        name,
        {"criterion": "functorial joint embedding", "functor": F.name},
        contractible=True,
    )
