import logging

import numpy as np

from fincat.category._category import FiniteCategory
from fincat.category._derive import opposite_category
from fincat.category._report import PropertyReport
from fincat.config import StepBudget
from fincat.errors import ResourceLimit, SpanNotInCategory


logger = logging.getLogger(__name__)


def _ids(C, indices):
    return [C.morphisms[i] for i in indices]


def _position(sorted_indices, values):
    return np.searchsorted(sorted_indices, values)


def _all_mono(C: FiniteCategory, budget: StepBudget):
    n = C.n_morphisms
    for f in range(n):
        gs = C.in_indices(C.src[f])
        budget.tick(len(gs))
        key = C.src[gs] * n + C.table[f, gs]
        values, counts = np.unique(key, return_counts=True)
        if (counts > 1).any():
            g, h = gs[key == values[counts > 1][0]][:2]
            return PropertyReport.fails(
                "AllMono", {"f": C.morphisms[f], "g": C.morphisms[g], "h": C.morphisms[h]})
    return PropertyReport.holds("AllMono")


def _initial(C: FiniteCategory, budget: StepBudget, name="Initial"):
    if not C.n_objects:
        return PropertyReport.fails(name, {"reason": "empty category"})
    counts = C.hom_counts()
    budget.tick(counts.size)
    unique = np.flatnonzero((counts == 1).all(axis=1))
    if len(unique):
        return PropertyReport.holds(name, {"object": C.objects[unique[0]]})
    obstructions = {
        x: C.objects[np.flatnonzero(counts[i] != 1)[0]]
        for i, x in enumerate(C.objects)}
    return PropertyReport.fails(name, {"obstructions": obstructions})


def _terminal(C: FiniteCategory, budget: StepBudget):
    return _initial(opposite_category(C), budget, name="Terminal")


def _jointly_reachable(C: FiniteCategory, budget: StepBudget):
    """First pair of objects with no common target, or None."""
    reach = C.hom_counts() > 0
    for i in range(C.n_objects):
        budget.tick(C.n_objects)
        common = (reach[i][None, :] & reach[i:]).any(axis=1)
        if not common.all():
            j = i + np.flatnonzero(~common)[0]
            return [C.objects[i], C.objects[j]]
    return None


def _filtered(C: FiniteCategory, budget: StepBudget, name="Filtered"):
    if not C.n_objects:
        return PropertyReport.fails(name, {"case": "empty"})
    pair = _jointly_reachable(C, budget)
    if pair is not None:
        return PropertyReport.fails(name, {"case": "pair", "objects": pair})
    for i in range(C.n_objects):
        for j in range(C.n_objects):
            homs = C.hom_indices(i, j)
            out = C.out_indices(j)
            for a, f in enumerate(homs):
                for g in homs[a + 1:]:
                    budget.tick(len(out))
                    if not (C.table[out, f] == C.table[out, g]).any():
                        return PropertyReport.fails(
                            name, {"case": "parallel", "morphisms": _ids(C, (f, g))})
    return PropertyReport.holds(name)


def _cofiltered(C: FiniteCategory, budget: StepBudget):
    return _filtered(opposite_category(C), budget, name="Cofiltered")


def _joint_embedding(C: FiniteCategory, budget: StepBudget):
    pair = _jointly_reachable(C, budget)
    if pair is not None:
        return PropertyReport.fails("JEP", {"objects": pair})
    return PropertyReport.holds("JEP")


def all_spans(C: FiniteCategory) -> list:
    """Spans ``(f, g)`` of non-identity morphisms with a shared source,
    f before g in id order."""
    spans = []
    for a in range(C.n_objects):
        out = C.out_indices(a)
        out = out[~C.identity_mask()[out]]
        spans.extend(
            (int(f), int(g)) for k, f in enumerate(out) for g in out[k + 1:])
    return spans


def resolve_spans(C: FiniteCategory, spans) -> list:
    resolved = []
    for span in spans:
        f_id, g_id = span[-2:]
        try:
            f, g = C.morphism_index(f_id), C.morphism_index(g_id)
        except ValueError:
            raise SpanNotInCategory(
                f"span {list(span)} is not in {C.name}", {"span": list(span)})
        if C.src[f] != C.src[g] or (
                len(span) == 3 and C.objects[C.src[f]] != span[0]):
            raise SpanNotInCategory(
                f"legs of span {list(span)} do not share a source",
                {"span": list(span)})
        resolved.append((f, g))
    return resolved


def find_amalgam(C: FiniteCategory, f: int, g: int):
    """Return ``(u, v)`` with ``u . f == v . g`` or None."""
    out_b, out_c = C.out_indices(C.tgt[f]), C.out_indices(C.tgt[g])
    left, right = C.table[out_b, f], C.table[out_c, g]
    common = np.intersect1d(left, right)
    if not len(common):
        return None
    return out_b[left == common[0]][0], out_c[right == common[0]][0]


def _span_witness(C, f, g):
    return {"span": [C.objects[C.src[f]], C.morphisms[f], C.morphisms[g]]}


def _amalgamation(C: FiniteCategory, budget: StepBudget, spans=None, name="AP"):
    spans = all_spans(C) if spans is None else resolve_spans(C, spans)
    for f, g in spans:
        budget.tick(C.n_objects)
        if find_amalgam(C, f, g) is None:
            return PropertyReport.fails(name, _span_witness(C, f, g))
    return PropertyReport.holds(name, spans_checked=len(spans))


def _is_coproduct(C, budget, i, j, s, ii, jj):
    for z in range(C.n_objects):
        H = C.hom_indices(s, z)
        P, Q = C.hom_indices(i, z), C.hom_indices(j, z)
        budget.tick(len(H) + 1)
        if len(H) != len(P) * len(Q):
            return False
        codes = (
            _position(P, C.table[H, ii]) * len(Q)
            + _position(Q, C.table[H, jj]))
        if len(np.unique(codes)) != len(H):
            return False
    return True


def _binary_coproducts(C: FiniteCategory, budget: StepBudget, name="BinaryCoproducts"):
    for i in range(C.n_objects):
        for j in range(i, C.n_objects):
            found = any(
                _is_coproduct(C, budget, i, j, s, ii, jj)
                for s in range(C.n_objects)
                for ii in C.hom_indices(i, s)
                for jj in C.hom_indices(j, s))
            if not found:
                return PropertyReport.fails(
                    name, {"objects": [C.objects[i], C.objects[j]]})
    return PropertyReport.holds(name)


def _binary_products(C: FiniteCategory, budget: StepBudget):
    return _binary_coproducts(opposite_category(C), budget, name="BinaryProducts")


def _is_pushout(C, budget, f, g, d, u, v):
    b, c = C.tgt[f], C.tgt[g]
    for z in range(C.n_objects):
        H = C.hom_indices(d, z)
        P, Q = C.hom_indices(b, z), C.hom_indices(c, z)
        budget.tick(len(P) * len(Q) + 1)
        compatible = (C.table[P, f][:, None] == C.table[Q, g][None, :]).sum()
        if len(H) != compatible:
            return False
        codes = _position(P, C.table[H, u]) * len(Q) + _position(Q, C.table[H, v])
        if len(np.unique(codes)) != len(H):
            return False
    return True


def find_pushout(C: FiniteCategory, f: int, g: int, budget: StepBudget):
    """Return ``(d, u, v)`` of a pushout of the span (f, g) or None."""
    b, c = C.tgt[f], C.tgt[g]
    for d in range(C.n_objects):
        for u in C.hom_indices(b, d):
            for v in C.hom_indices(c, d):
                if C.table[u, f] != C.table[v, g]:
                    continue
                if _is_pushout(C, budget, f, g, d, u, v):
                    return d, u, v
    return None


def _pushouts(C: FiniteCategory, budget: StepBudget, name="Pushouts", leg="span"):
    identity = C.identity_mask()
    spans = all_spans(C) + [
        (f, f) for f in range(C.n_morphisms) if not identity[f]]
    for f, g in sorted(spans):
        if find_pushout(C, f, g, budget) is None:
            witness = _span_witness(C, f, g)
            return PropertyReport.fails(name, {leg: witness["span"]})
    return PropertyReport.holds(name)


def _pullbacks(C: FiniteCategory, budget: StepBudget):
    return _pushouts(opposite_category(C), budget, name="Pullbacks", leg="cospan")


def _right_fractions(C: FiniteCategory, budget: StepBudget):
    cones = _amalgamation(opposite_category(C), budget, name="cones")
    if cones.is_fails:
        return PropertyReport.fails(
            "RightFractions", {"condition": 1, "cospan": cones.witness["span"]})
    mono = _all_mono(C, budget)
    if mono.is_holds:
        # fu = fv forces u = v, so g = id settles condition 2
        return PropertyReport.holds(
            "RightFractions", condition_2="vacuous: every morphism is monic")
    for f in range(C.n_morphisms):
        b = C.src[f]
        for a in range(C.n_objects):
            parallel = C.hom_indices(a, b)
            ins = C.in_indices(a)
            for k, u in enumerate(parallel):
                for v in parallel[k + 1:]:
                    if C.table[f, u] != C.table[f, v]:
                        continue
                    budget.tick(len(ins))
                    if not (C.table[u, ins] == C.table[v, ins]).any():
                        return PropertyReport.fails(
                            "RightFractions",
                            {"condition": 2,
                             "f": C.morphisms[f],
                             "u": C.morphisms[u],
                             "v": C.morphisms[v]})
    return PropertyReport.holds("RightFractions")


def _no_maximal_objects(C: FiniteCategory, budget: StepBudget):
    noninvertible = C.inverse_indices() < 0
    for i, x in enumerate(C.objects):
        budget.tick()
        if not noninvertible[C.out_indices(i)].any():
            return PropertyReport.fails("NoMaximalObjects", {"object": x})
    return PropertyReport.holds("NoMaximalObjects")


def _connected(C: FiniteCategory, budget: StepBudget):
    components = C.components()
    if len(components) == 1:
        return PropertyReport.holds("Connected")
    return PropertyReport.fails("Connected", {"components": components})


_DECIDERS = {
    "AllMono": _all_mono,
    "Initial": _initial,
    "Terminal": _terminal,
    "Filtered": _filtered,
    "Cofiltered": _cofiltered,
    "JEP": _joint_embedding,
    "AP": _amalgamation,
    "BinaryCoproducts": _binary_coproducts,
    "BinaryProducts": _binary_products,
    "Pushouts": _pushouts,
    "Pullbacks": _pullbacks,
    "RightFractions": _right_fractions,
    "NoMaximalObjects": _no_maximal_objects,
    "Connected": _connected,
}

PROPERTIES = tuple(_DECIDERS)


def check_category_property(
    C: FiniteCategory,
    prop: str,
    spans: list = None,
    max_steps: int = None,
) -> PropertyReport:
    """Decide a property of a finite category by exhaustion.

    Parameters
    ----------
    C : FiniteCategory
        validated category
    prop : str
        one of ``PROPERTIES``
    spans : list, optional
        restrict AP to these spans, given as ``(f, g)`` or ``(A, f, g)``
        id tuples
    max_steps : int, optional
        search budget, by default ``config.max_steps``

    Returns
    -------
    PropertyReport
        Holds or Fails with a witness, Unknown when the budget ran out
    """
    if prop not in _DECIDERS:
        raise ValueError(f"unknown property {prop!r}, expected one of {PROPERTIES}")
    if spans is not None and prop != "AP":
        raise ValueError("spans only apply to AP")
    budget = StepBudget(max_steps)
    try:
        if prop == "AP":
            report = _amalgamation(C, budget, spans)
        else:
            report = _DECIDERS[prop](C, budget)
    except ResourceLimit as e:
        logger.warning("%s on %s stopped after %d steps", prop, C.name, budget.used)
        return PropertyReport.exhausted(prop, e)
    logger.debug("%s on %s: %s (%d steps)", prop, C.name, report.verdict.value, budget.used)
    return report


CONTRACTIBILITY_CRITERIA = (
    "Initial", "Terminal", "Filtered", "Cofiltered",
    "BinaryCoproducts", "BinaryProducts",
)


def contractibility_certificate(C: FiniteCategory, max_steps: int = None) -> PropertyReport:
    """Certify that the nerve of C is contractible.

    Tries, in order, an initial object, a terminal object, filteredness,
    cofilteredness, binary coproducts and binary products. The empty
    category Fails; otherwise a category none of these certify is Unknown.
    """
    if not C.n_objects:
        return PropertyReport.fails("Contractible", {"reason": "empty category"})
    tried = {}
    for criterion in CONTRACTIBILITY_CRITERIA:
        report = check_category_property(C, criterion, max_steps=max_steps)
        if report.is_holds:
            witness = {"criterion": criterion}
            witness.update(report.witness or {})
            return PropertyReport.holds("Contractible", witness)
        tried[criterion] = report.verdict.value
    return PropertyReport.unknown("Contractible", tried=tried)
