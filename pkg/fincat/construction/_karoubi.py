import logging

import numpy as np

from fincat.category import FiniteCategory, Functor, pair_id


logger = logging.getLogger(__name__)


def idempotents(C: FiniteCategory) -> np.ndarray:
    """Endomorphisms e with ``e . e == e``, identities included."""
    ends = np.flatnonzero(C.src == C.tgt)
    return ends[C.table[ends, ends] == ends]


def karoubi_envelope(C: FiniteCategory, name: str = None) -> tuple:
    """Idempotent splitting of C.

    An object is a pair ``(X, e)`` of an object and an idempotent on it,
    written ``X`` when e is the identity. A morphism ``(X, e) -> (Y, e')``
    is a morphism m of C with ``e' . m . e == m``; between objects of the
    form ``(X, 1)`` it keeps its id, otherwise it is written
    ``[m:(X,e)->(Y,e')]``. A split label already used by an object of C
    gets primes appended until it is free.

    Returns
    -------
    envelope : FiniteCategory
        the Karoubi envelope
    inclusion : Functor
        ``X -> (X, 1)``, identical on ids
    """
    pairs = []
    taken = set(C.objects)
    for e in idempotents(C):
        x = C.src[e]
        if e == C.identity[x]:
            label = C.objects[x]
        else:
            label = pair_id(C.objects[x], C.morphisms[e])
            # primes keep split objects apart from existing ids
            while label in taken:
                label += "'"
            taken.add(label)
        pairs.append((label, int(x), int(e)))
    pairs.sort()
    plain = {label for label, x, e in pairs if e == C.identity[x]}

    def morphism_id(m, a, b):
        if a in plain and b in plain:
            return C.morphisms[m]
        return f"[{C.morphisms[m]}:{a}->{b}]"

    morphisms = []
    lifted = {}
    by_source = {}
    for a, x, e in pairs:
        for b, y, e2 in pairs:
            homs = C.hom_indices(x, y)
            kept = homs[C.table[C.table[e2, homs], e] == homs]
            for m in kept:
                m_id = morphism_id(m, a, b)
                morphisms.append((m_id, a, b))
                lifted[m_id] = (int(m), a, b)
                by_source.setdefault(a, []).append(m_id)
    identities = {a: morphism_id(e, a, a) for a, x, e in pairs}
    compose = {}
    for f_id, (f, a, b) in lifted.items():
        for g_id in by_source.get(b, ()):
            g, _, c = lifted[g_id]
            compose[g_id, f_id] = morphism_id(C.table[g, f], a, c)
    if name is None and C.name is not None:
        name = f"Kar({C.name})"
    E = FiniteCategory([a for a, _, _ in pairs], morphisms, identities, compose, name=name)
    inclusion = Functor(
        C, E, {x: x for x in C.objects}, {m: m for m in C.morphisms},
        name="inclusion")
    logger.debug(
        "Karoubi envelope of %s: %d -> %d objects", C.name, C.n_objects, E.n_objects)
    return E, inclusion
