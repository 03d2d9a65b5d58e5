import logging
from typing import NamedTuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from fincat.category import all_spans, FiniteCategory, Functor
from fincat.category._properties import resolve_spans
from fincat.config import config
from fincat.errors import ResourceLimit


logger = logging.getLogger(__name__)

ALL_SPANS = "All"


def amalgam_id(C: FiniteCategory, f: int, g: int) -> str:
    return f"amal({C.objects[C.src[f]]},{C.morphisms[f]},{C.morphisms[g]})"


class AmalgamationStep(NamedTuple):
    """Result of adjoining amalgams.

    Attributes
    ----------
    category : FiniteCategory
        the enlarged category
    inclusion : Functor
        inclusion of the input, identical on ids
    amalgams : list of dict
        per span: ``span`` as ``[A, f, g]``, the new ``object`` and its
        legs ``j`` (from the target of f) and ``k`` (from the target of g)
    """

    category: FiniteCategory
    inclusion: Functor
    amalgams: list


def _glued_homs(C: FiniteCategory, f: int, g: int, x: int):
    """Hom(x, B) + Hom(x, C) glued along ``f a ~ g a`` for a in Hom(x, A).

    Returns the members as ``(part, morphism)`` pairs and the class label
    of each member.
    """
    a_obj, b_obj, c_obj = C.src[f], C.tgt[f], C.tgt[g]
    left, right = C.hom_indices(x, b_obj), C.hom_indices(x, c_obj)
    members = [(1, int(m)) for m in left] + [(2, int(m)) for m in right]
    if not members:
        return members, np.zeros(0, dtype=np.int64)
    through = C.hom_indices(x, a_obj)
    position_left = {int(m): i for i, m in enumerate(left)}
    position_right = {int(m): len(left) + i for i, m in enumerate(right)}
    rows = [position_left[int(C.table[f, a])] for a in through]
    cols = [position_right[int(C.table[g, a])] for a in through]
    graph = coo_matrix(
        (np.ones(len(rows)), (rows, cols)), shape=(len(members), len(members)))
    _, labels = connected_components(graph, directed=False)
    return members, labels


def adjoin_amalgamation_step(
    C: FiniteCategory,
    spans=ALL_SPANS,
    name: str = None,
    max_objects: int = None,
) -> AmalgamationStep:
    """Adjoin a formal amalgam for each span.

    For a span ``B <-f- A -g-> C`` the new object N has
    ``Hom(X, N) = Hom(X, B) + Hom(X, C)`` glued along ``f a ~ g a``,
    composition by precomposition, and no morphisms out except its
    identity.

    Parameters
    ----------
    C : FiniteCategory
        stage category
    spans : "All" or list
        "All" takes every pair of distinct non-identity morphisms with a
        shared source; otherwise ``(f, g)`` or ``(A, f, g)`` id tuples
    name : str, optional
        name of the result
    max_objects : int, optional
        object budget, by default ``config.max_objects``

    Returns
    -------
    AmalgamationStep

    Raises
    ------
    SpanNotInCategory
        a given span is not a span of C
    ResourceLimit
        the result would exceed ``max_objects``
    """
    limit = config.max_objects if max_objects is None else max_objects
    resolved = all_spans(C) if spans == ALL_SPANS else resolve_spans(C, spans)
    resolved = list(dict.fromkeys(resolved))
    if C.n_objects + len(resolved) > limit:
        raise ResourceLimit(
            "max_objects", limit,
            f"adjoining {len(resolved)} amalgams to {C.name} exceeds {limit} objects")

    objects = list(C.objects)
    morphisms = [
        (m, C.objects[s], C.objects[t]) for m, s, t in zip(C.morphisms, C.src, C.tgt)]
    identities = {x: C.identity_of(x) for x in C.objects}
    compose = {(g, f): h for g, f, h in C.composition_entries()}
    amalgams = []
    for f, g in resolved:
        N = amalgam_id(C, f, g)
        objects.append(N)
        identities[N] = f"1_{N}"
        morphisms.append((identities[N], N, N))
        ids = {}
        for x in range(C.n_objects):
            members, labels = _glued_homs(C, f, g, x)
            first = {}
            for (part, m), label in zip(members, labels):
                first.setdefault(label, (part, m))
            classes = set()
            for (part, m), label in zip(members, labels):
                rep_part, rep = first[label]
                ids[part, m] = f"{N}:{'jk'[rep_part - 1]}.{C.morphisms[rep]}"
                classes.add(ids[part, m])
            morphisms.extend((m_id, C.objects[x], N) for m_id in sorted(classes))
        # [h] . m = [h . m]
        for (part, h), h_id in ids.items():
            for m in C.in_indices(C.src[h]):
                if C.identity_mask()[m]:
                    continue
                compose[h_id, C.morphisms[m]] = ids[part, int(C.table[h, m])]
        j = ids[1, int(C.identity[C.tgt[f]])]
        k = ids[2, int(C.identity[C.tgt[g]])]
        amalgams.append({
            "span": [C.objects[C.src[f]], C.morphisms[f], C.morphisms[g]],
            "object": N, "j": j, "k": k})

    if name is None and C.name is not None:
        name = C.name + "+amal"
    D = FiniteCategory(objects, morphisms, identities, compose, name=name)
    inclusion = Functor(
        C, D, {x: x for x in C.objects}, {m: m for m in C.morphisms},
        name="inclusion")
    logger.debug(
        "adjoined %d amalgams to %s: %d objects, %d morphisms",
        len(amalgams), C.name, D.n_objects, D.n_morphisms)
    return AmalgamationStep(D, inclusion, amalgams)
