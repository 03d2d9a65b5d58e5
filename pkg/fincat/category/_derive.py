from typing import NamedTuple

import numpy as np

from fincat.category._category import FiniteCategory, UNDEFINED
from fincat.category._functor import Functor
from fincat.errors import DanglingReference


class Opposite(NamedTuple):
    pass


class Product(NamedTuple):
    other: FiniteCategory


class Slice(NamedTuple):
    """Comma category ``F / d``: objects ``(c, u: F(c) -> d)``."""

    functor: Functor
    obj: str


class Fiber(NamedTuple):
    """Objects over ``d`` and morphisms over its identity."""

    functor: Functor
    obj: str


def pair_id(a: str, b: str) -> str:
    return f"({a},{b})"


def derive_category(C: FiniteCategory, how) -> FiniteCategory:
    """Derive a new category from C.

    Parameters
    ----------
    C : FiniteCategory
        input category (the domain of the functor for Slice and Fiber)
    how : Opposite, Product, Slice or Fiber
        which construction to apply

    Returns
    -------
    FiniteCategory
        the derived category
    """
    if isinstance(how, Opposite):
        return opposite_category(C)
    if isinstance(how, Product):
        return product_category(C, how.other)
    if isinstance(how, (Slice, Fiber)):
        if how.functor.dom != C:
            raise ValueError("functor does not start at the given category")
        how.functor.validate()
        if how.obj not in how.functor.cod.objects:
            raise DanglingReference(
                f"unknown object {how.obj!r}", {"object": how.obj})
        if isinstance(how, Slice):
            return slice_category(how.functor, how.obj)
        return fiber_category(how.functor, how.obj)
    raise TypeError(f"unsupported derivation {how!r}")


def opposite_category(C: FiniteCategory) -> FiniteCategory:
    """Same ids with every arrow reversed."""
    morphisms = [
        (m, C.objects[t], C.objects[s])
        for m, s, t in zip(C.morphisms, C.src, C.tgt)]
    compose = {(f, g): h for g, f, h in C.composition_entries()}
    name = C.name
    if name is not None:
        name = name[:-3] if name.endswith("^op") else name + "^op"
    return FiniteCategory(
        C.objects,
        morphisms,
        {x: C.identity_of(x) for x in C.objects},
        compose,
        name=name,
    )


def product_category(C: FiniteCategory, D: FiniteCategory) -> FiniteCategory:
    """Product with objects ``(x,y)`` and morphisms ``(f,g)``."""
    objects = [pair_id(x, y) for x in C.objects for y in D.objects]
    morphisms = [
        (pair_id(f, g),
         pair_id(C.objects[C.src[i]], D.objects[D.src[j]]),
         pair_id(C.objects[C.tgt[i]], D.objects[D.tgt[j]]))
        for i, f in enumerate(C.morphisms) for j, g in enumerate(D.morphisms)]
    identities = {
        pair_id(x, y): pair_id(C.identity_of(x), D.identity_of(y))
        for x in C.objects for y in D.objects}
    left = list(C.composition_entries(include_identities=True))
    right = list(D.composition_entries(include_identities=True))
    compose = {
        (pair_id(g1, g2), pair_id(f1, f2)): pair_id(h1, h2)
        for g1, f1, h1 in left for g2, f2, h2 in right}
    name = None
    if C.name is not None and D.name is not None:
        name = f"{C.name}x{D.name}"
    return FiniteCategory(objects, morphisms, identities, compose, name=name)


def projection_functor(C: FiniteCategory, D: FiniteCategory, which: int,
                       product: FiniteCategory = None) -> Functor:
    """Projection of ``C x D`` onto its first (1) or second (2) factor."""
    assert which in (1, 2), which
    if product is None:
        product = product_category(C, D)
    if which == 1:
        on_objects = {pair_id(x, y): x for x in C.objects for y in D.objects}
        on_morphisms = {
            pair_id(f, g): f for f in C.morphisms for g in D.morphisms}
        cod = C
    else:
        on_objects = {pair_id(x, y): y for x in C.objects for y in D.objects}
        on_morphisms = {
            pair_id(f, g): g for f in C.morphisms for g in D.morphisms}
        cod = D
    return Functor(
        product, cod, on_objects, on_morphisms, name=f"pi{which}",
        validate=False)


def opposite_functor(F: Functor) -> Functor:
    return Functor.from_arrays(
        opposite_category(F.dom),
        opposite_category(F.cod),
        F.object_map,
        F.morphism_map,
        name=None if F.name is None else F.name + "^op",
        validate=False,
    )


def slice_category(F: Functor, d: str) -> FiniteCategory:
    dom, cod = F.dom, F.cod
    j = cod.object_index(d)
    objects = []
    over = {}
    for c in range(dom.n_objects):
        for u in cod.hom_indices(F.object_map[c], j):
            key = pair_id(dom.objects[c], cod.morphisms[u])
            objects.append(key)
            over.setdefault(c, []).append((key, u))

    def morphism_id(m, u, u2):
        return f"({dom.morphisms[m]};{cod.morphisms[u]},{cod.morphisms[u2]})"

    # (c, u) -> (c', u2) is an m: c -> c' with u2 . F(m) = u
    morphisms = []
    lifted = {}
    by_source = {}
    for m in range(dom.n_morphisms):
        for key, u in over.get(dom.src[m], []):
            for key2, u2 in over.get(dom.tgt[m], []):
                if cod.table[u2, F.morphism_map[m]] != u:
                    continue
                m_id = morphism_id(m, u, u2)
                morphisms.append((m_id, key, key2))
                lifted[m_id] = (m, u, u2, key2)
                by_source.setdefault(key, []).append(m_id)
    identities = {
        key: morphism_id(dom.identity[c], u, u)
        for c, entries in over.items() for key, u in entries}
    compose = {}
    for f_id, (f, u, _, key2) in lifted.items():
        for g_id in by_source.get(key2, []):
            g, _, u3, _ = lifted[g_id]
            compose[g_id, f_id] = morphism_id(dom.table[g, f], u, u3)
    return FiniteCategory(
        objects, morphisms, identities, compose,
        name=f"{F.name}/{d}" if F.name else None)


def fiber_category(F: Functor, d: str) -> FiniteCategory:
    dom, cod = F.dom, F.cod
    j = cod.object_index(d)
    keep_objects = np.flatnonzero(F.object_map == j)
    keep = np.flatnonzero(F.morphism_map == cod.identity[j])
    morphisms = [
        (dom.morphisms[m], dom.objects[dom.src[m]], dom.objects[dom.tgt[m]])
        for m in keep]
    kept = set(keep.tolist())
    compose = {}
    for g in keep:
        for f in keep:
            h = dom.table[g, f]
            if h != UNDEFINED:
                assert h in kept
                compose[dom.morphisms[g], dom.morphisms[f]] = dom.morphisms[h]
    return FiniteCategory(
        [dom.objects[x] for x in keep_objects],
        morphisms,
        {dom.objects[x]: dom.morphisms[dom.identity[x]] for x in keep_objects},
        compose,
        name=f"{F.name}^-1({d})" if F.name else None,
    )
