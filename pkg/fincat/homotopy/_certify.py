import logging

from fincat.category import (
    check_category_property,
    check_functor_property,
    compose_functors,
    contractibility_certificate,
    derive_category,
    FiniteCategory,
    Fiber,
    Functor,
    identity_functor,
    NaturalTransformation,
    PropertyReport,
    Slice,
    Verdict,
)
from fincat.config import config
from fincat.errors import ResourceLimit, ShapeMismatch
from fincat.homotopy._chain import nerve_homology
from fincat.homotopy._fundamental import fundamental_group


logger = logging.getLogger(__name__)

QUILLEN_SIDES = ("Slice", "Fiber")


def _homology_or_limit(C: FiniteCategory, d: int):
    try:
        return nerve_homology(C, d)
    except ResourceLimit as error:
        logger.warning("homology of %s up to %d: %s", C.name, d, error)
        return None


def _homology_agreement(dom: FiniteCategory, cod: FiniteCategory, d: int) -> dict:
    left, right = _homology_or_limit(dom, d), _homology_or_limit(cod, d)
    out = {"d": d}
    if left is None or right is None:
        out["agrees"] = None
        return out
    out["agrees"] = left == right
    out["dom"] = str(left)
    out["cod"] = str(right)
    return out


def quillen_a_certify(
    F: Functor,
    side: str = "Slice",
    d: int = None,
    at=None,
    max_steps: int = None,
) -> PropertyReport:
    """Certify that F induces a homotopy equivalence of nerves.

    Every slice ``F/D`` (or, for an opfibration or fibration, every fiber
    ``F^-1(D)``) must be contractible; contractibility is certified by
    ``contractibility_certificate`` and refuted by nonvanishing reduced
    homology.

    Parameters
    ----------
    F : Functor
        valid functor
    side : str
        "Slice" or "Fiber"
    d : int, optional
        truncation for the homology checks, by default ``config.max_dim``
    at : iterable of str, optional
        restrict to these objects of the codomain
    max_steps : int, optional
        budget of each property decision

    Returns
    -------
    PropertyReport
        Holds with the criterion used for every object and a homology
        cross-check of domain and codomain, Fails with the object whose
        slice is not contractible, HypothesesNotMet when the Fiber form is
        requested for a functor that is neither an opfibration nor a
        fibration, Unknown otherwise
    """
    if side not in QUILLEN_SIDES:
        raise ValueError(f"unknown side {side!r}, expected one of {QUILLEN_SIDES}")
    d = config.max_dim if d is None else d
    name = "QuillenA"
    F.validate()
    if side == "Fiber":
        opfibration = check_functor_property(F, "Opfibration", max_steps=max_steps)
        if not opfibration.is_holds:
            fibration = check_functor_property(F, "Fibration", max_steps=max_steps)
            if not fibration.is_holds:
                return PropertyReport(
                    name, Verdict.HYPOTHESES_NOT_MET,
                    {"opfibration": opfibration.to_dict(),
                     "fibration": fibration.to_dict()})
    objects = F.cod.objects if at is None else list(at)
    certificates, unknown = {}, {}
    for D in objects:
        how = Slice(F, D) if side == "Slice" else Fiber(F, D)
        piece = derive_category(F.dom, how)
        report = contractibility_certificate(piece, max_steps=max_steps)
        if report.is_holds:
            certificates[D] = report.witness["criterion"]
            continue
        if report.is_fails:
            return PropertyReport.fails(
                name, {"object": D, "side": side, "reason": "empty category"})
        homology = _homology_or_limit(piece, d)
        if homology is not None and not homology.reduced_vanishes():
            return PropertyReport.fails(
                name,
                {"object": D, "side": side, "reason": "reduced homology",
                 "homology": homology.to_dict()})
        unknown[D] = report.details.get("tried", {})
    if unknown:
        return PropertyReport.unknown(name, certified=certificates, unknown=unknown)
    return PropertyReport.holds(
        name,
        {"side": side, "certificates": certificates},
        homology=_homology_agreement(F.dom, F.cod, d),
    )


def _classify(t: NaturalTransformation, F: Functor, G: Functor):
    """Which unit-like role a transformation plays, or None."""
    for label, identity, composite in (
        ("dom", identity_functor(F.dom), compose_functors(G, F)),
        ("cod", identity_functor(F.cod), compose_functors(F, G)),
    ):
        if t.dom != identity.dom or t.cod != identity.cod:
            continue
        ends = (t.source, t.target)
        if ((ends[0].agrees_with(identity) and ends[1].agrees_with(composite))
                or (ends[0].agrees_with(composite) and ends[1].agrees_with(identity))):
            return label
    return None


def homotopy_equivalence_certify(
    F: Functor,
    G: Functor,
    evidence,
    d: int = None,
    max_cosets: int = None,
) -> PropertyReport:
    """Certify that F and G are mutually inverse homotopy equivalences.

    A natural transformation between two functors gives a homotopy
    between their realizations, so transformations connecting the
    identities with ``G F`` and ``F G`` (in either direction) suffice.

    Parameters
    ----------
    F : Functor
        functor C -> D
    G : Functor
        functor D -> C
    evidence : list of NaturalTransformation
        at least one transformation for each side
    d : int, optional
        truncation of the homology cross-check, by default ``config.max_dim``
    max_cosets : int, optional
        coset budget of the fundamental group cross-check

    Raises
    ------
    ShapeMismatch
        F and G are not opposite, or a transformation connects the wrong
        functors
    NaturalityFailure
        a naturality square of the evidence fails to commute
    """
    if F.cod != G.dom or G.cod != F.dom:
        raise ShapeMismatch(
            "F and G must run in opposite directions",
            {"F": F.name, "G": G.name})
    d = config.max_dim if d is None else d
    sides = {}
    for t in evidence:
        role = _classify(t, F, G)
        if role is None:
            raise ShapeMismatch(
                "transformation does not connect an identity with G F or F G",
                {"transformation": t.name})
        t.validate()
        sides.setdefault(role, t.name)
    missing = [role for role in ("dom", "cod") if role not in sides]
    if missing:
        raise ShapeMismatch(
            "evidence must cover both composites", {"missing": missing})

    details = {"homology": _homology_agreement(F.dom, F.cod, d)}
    if F.dom.n_objects:
        x = F.dom.objects[0]
        orders = []
        for C, point in ((F.dom, x), (F.cod, F.on_object(x))):
            orders.append(fundamental_group(C, point, max_cosets=max_cosets).order)
        details["pi1_orders"] = orders
        if None not in orders and orders[0] != orders[1]:
            return PropertyReport.fails(
                "HomotopyEquivalence",
                {"reason": "fundamental groups differ", "orders": orders})
    if details["homology"]["agrees"] is False:
        return PropertyReport.fails(
            "HomotopyEquivalence",
            {"reason": "homology differs", "homology": details["homology"]})
    return PropertyReport.holds(
        "HomotopyEquivalence", {"evidence": sides}, **details)


SHADOW_HYPOTHESES = ("Pushouts", "Pullbacks", "RightFractions")


def asphericity_shadow(
    C: FiniteCategory,
    basepoint: str = None,
    d: int = None,
    max_cosets: int = None,
) -> PropertyReport:
    """Homological shadow of asphericity.

    When C has pushouts, pullbacks or a calculus of right fractions its
    nerve is aspherical; with a trivial fundamental group the reduced
    homology must then vanish up to ``d``.

    Returns
    -------
    PropertyReport
        Holds when some hypothesis holds, the fundamental group is
        trivial and reduced homology vanishes; Fails with the homology
        otherwise; HypothesesNotMet when no hypothesis holds or the
        fundamental group is not known to be trivial
    """
    name = "AsphericityShadow"
    d = config.max_dim if d is None else d
    verdicts = {
        prop: check_category_property(C, prop).verdict.value
        for prop in SHADOW_HYPOTHESES}
    details = {"hypotheses": verdicts}
    if not C.n_objects or "Holds" not in verdicts.values():
        return PropertyReport(name, Verdict.HYPOTHESES_NOT_MET, details=details)
    if basepoint is None:
        basepoint = C.objects[0]
    pi1 = fundamental_group(C, basepoint, max_cosets=max_cosets)
    details["pi1_order"] = pi1.order
    details["pi1_abelianization"] = str(pi1.abelian)
    if len(C.components()) != 1 or not pi1.is_trivial:
        return PropertyReport(name, Verdict.HYPOTHESES_NOT_MET, details=details)
    try:
        homology = nerve_homology(C, d)
    except ResourceLimit as error:
        return PropertyReport.exhausted(name, error)
    details["homology"] = homology.to_dict()
    if homology.reduced_vanishes():
        return PropertyReport(name, Verdict.HOLDS, details=details)
    return PropertyReport.fails(name, {"homology": str(homology)}, **details)
