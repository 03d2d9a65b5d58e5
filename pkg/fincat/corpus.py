"""Builders for the bundled example categories and complexes."""

from itertools import permutations
import logging
import re

from fincat.category import FiniteCategory, Functor
from fincat.construction import (
    boolean_lattice,
    boundary_complex,
    face_poset,
    Poset,
    simplex,
)
from fincat.group import FiniteGroupTable


logger = logging.getLogger(__name__)


def cyclic_group(n: int) -> FiniteGroupTable:
    """Cyclic group with elements ``1, g, g^2, ...``."""
    assert n >= 1, n
    labels = ["1", "g"] + [f"g^{k}" for k in range(2, n)]
    return FiniteGroupTable(
        labels[:n], [[(a + b) % n for b in range(n)] for a in range(n)], identity=0)


def _permutation_label(p) -> str:
    if len(p) <= 10:
        return "".join(str(i) for i in p)
    return ",".join(str(i) for i in p)


def symmetric_group(n: int) -> FiniteGroupTable:
    """Permutations of ``0..n-1`` in one-line notation, ``(a b)(i) = a(b(i))``."""
    assert n >= 1, n
    elements = list(permutations(range(n)))
    index = {p: k for k, p in enumerate(elements)}
    table = [
        [index[tuple(a[i] for i in b)] for b in elements] for a in elements]
    return FiniteGroupTable(
        [_permutation_label(p) for p in elements], table, identity=0, validate=False)


def classifying_category(G: FiniteGroupTable, name: str = None, obj: str = "o") -> FiniteCategory:
    """One-object category whose morphisms are the elements of G."""
    labels = G.elements
    index = {a: k for k, a in enumerate(labels)}
    return FiniteCategory(
        [obj],
        [(a, obj, obj) for a in labels],
        {obj: labels[G.identity]},
        lambda g, f: labels[G.table[index[g], index[f]]],
        name=name,
    )


def cyclic_classifying(n: int) -> FiniteCategory:
    return classifying_category(cyclic_group(n), name=f"BZ{n}")


def symmetric_classifying(n: int) -> FiniteCategory:
    return classifying_category(symmetric_group(n), name=f"BS{n}")


def walking_arrow() -> FiniteCategory:
    return FiniteCategory(
        ["a", "b"], [("1_a", "a", "a"), ("1_b", "b", "b"), ("f", "a", "b")],
        {"a": "1_a", "b": "1_b"}, {}, name="Arrow")


def walking_span() -> FiniteCategory:
    return FiniteCategory(
        ["A", "B", "C"],
        [("1_A", "A", "A"), ("1_B", "B", "B"), ("1_C", "C", "C"),
         ("f", "A", "B"), ("g", "A", "C")],
        {"A": "1_A", "B": "1_B", "C": "1_C"}, {}, name="Span")


def walking_idempotent() -> FiniteCategory:
    return FiniteCategory(
        ["o"], [("1_o", "o", "o"), ("e", "o", "o")],
        {"o": "1_o"}, {("e", "e"): "e"}, name="Idempotent")


def discrete(n: int) -> FiniteCategory:
    objects = [f"x{k}" for k in range(n)]
    return FiniteCategory(
        objects, [(f"1_{x}", x, x) for x in objects],
        {x: f"1_{x}" for x in objects}, {}, name=f"Discrete{n}")


def circle_poset() -> Poset:
    """a, b below x, y: the four-point model of the circle."""
    return Poset.from_relation(
        ["a", "b", "x", "y"], [("a", "x"), ("a", "y"), ("b", "x"), ("b", "y")])


def poset_with_top() -> Poset:
    return Poset.from_relation(
        ["a", "b", "c", "t"], [("a", "c"), ("b", "c"), ("c", "t")])


def injection_id(image, k: int) -> str:
    return f"U{len(image)}>U{k}[{','.join(str(i) for i in image)}]"


def injections(n: int, name: str = None) -> FiniteCategory:
    """Injections between the sets ``U0 = {}, ..., Un = {0..n-1}``.

    The morphism ``Uj>Uk[i0,...]`` sends ``t`` to ``i_t``; identities are
    ``1_Uk``.
    """
    objects = [f"U{k}" for k in range(n + 1)]
    morphisms, maps = [], {}
    for j in range(n + 1):
        for k in range(j, n + 1):
            for image in permutations(range(k), j):
                m = f"1_U{k}" if j == k and image == tuple(range(k)) else injection_id(image, k)
                morphisms.append((m, f"U{j}", f"U{k}"))
                maps[m] = (image, k)

    def compose(g, f):
        (outer, k), (inner, _) = maps[g], maps[f]
        image = tuple(outer[i] for i in inner)
        if len(image) == k and image == tuple(range(k)):
            return f"1_U{k}"
        return injection_id(image, k)

    return FiniteCategory(
        objects, morphisms, {x: "1_" + x for x in objects}, compose,
        name=name or f"FinInj{n}")


def small_objects(n: int) -> list:
    """Objects ``U0..Un`` of an injection category."""
    return [f"U{k}" for k in range(n + 1)]


def torsor_groupoid(G: FiniteGroupTable, copies: int = 2, name: str = None) -> FiniteCategory:
    """Groupoid of ``copies`` copies of the regular G-torsor.

    ``Tj>Tk[h]`` is right multiplication by h, so
    ``Tk>Tl[h'] . Tj>Tk[h] = Tj>Tl[h h']``.
    """
    objects = [f"T{k}" for k in range(copies)]

    def morphism_id(j, k, h):
        if j == k and h == G.identity:
            return f"1_T{j}"
        return f"T{j}>T{k}[{G.elements[h]}]"

    morphisms, parts = [], {}
    for j in range(copies):
        for k in range(copies):
            for h in range(G.order):
                m = morphism_id(j, k, h)
                morphisms.append((m, f"T{j}", f"T{k}"))
                parts[m] = (j, k, h)

    def compose(g, f):
        (_, l, h2), (j, _, h) = parts[g], parts[f]
        return morphism_id(j, l, G.table[h, h2])

    return FiniteCategory(
        objects, morphisms, {x: "1_" + x for x in objects}, compose, name=name)


def torsor_inclusion(G: FiniteGroupTable, BG: FiniteCategory, torsors: FiniteCategory) -> Functor:
    """``o -> T0`` and ``g -> Tj>Tk[g^-1]`` restricted to T0."""
    on_morphisms = {}
    for a in range(G.order):
        inverse = int(G.inverse[a])
        target = "1_T0" if inverse == G.identity else f"T0>T0[{G.elements[inverse]}]"
        on_morphisms[G.elements[a]] = target
    return Functor(BG, torsors, {BG.objects[0]: "T0"}, on_morphisms, name="inclusion")


def bundled_categories() -> dict:
    """Name to builder of every bundled category."""
    return {
        "BZ2": lambda: cyclic_classifying(2),
        "BZ3": lambda: cyclic_classifying(3),
        "BZ4": lambda: cyclic_classifying(4),
        "BS2": lambda: symmetric_classifying(2),
        "BS3": lambda: symmetric_classifying(3),
        "Arrow": walking_arrow,
        "Span": walking_span,
        "Idempotent": walking_idempotent,
        "Discrete3": lambda: discrete(3),
        "CirclePoset": lambda: circle_poset().category(name="CirclePoset"),
        "PosetWithTop": lambda: poset_with_top().category(name="PosetWithTop"),
        "Bool2": lambda: boolean_lattice("ab").category(name="Bool2"),
        "Bool3": lambda: boolean_lattice("abc").category(name="Bool3"),
        "FinInj2": lambda: injections(2),
        "FinInj3": lambda: injections(3),
        "Z3Tor": lambda: torsor_groupoid(cyclic_group(3), name="Z3Tor"),
        "FaceEdge": lambda: face_poset(simplex(1), name="FaceEdge")[1],
        "FaceBoundary2": lambda: face_poset(boundary_complex(2), name="FaceBoundary2")[1],
        "FaceBoundary3": lambda: face_poset(boundary_complex(3), name="FaceBoundary3")[1],
    }


_FAMILIES = (
    (re.compile(r"BZ(\d+)"), cyclic_classifying),
    (re.compile(r"BS(\d+)"), symmetric_classifying),
    (re.compile(r"FinInj(\d+)"), injections),
    (re.compile(r"Discrete(\d+)"), discrete),
)


def load(name: str) -> FiniteCategory:
    """Build a bundled category, or a member of the ``BZn``, ``BSn``,
    ``FinInjn`` and ``Discreten`` families."""
    builders = bundled_categories()
    if name in builders:
        logger.debug("building bundled category %s", name)
        return builders[name]()
    for pattern, build in _FAMILIES:
        match = pattern.fullmatch(name)
        if match:
            logger.debug("building %s from its family", name)
            return build(int(match.group(1)))
    raise KeyError(f"no bundled category {name!r}")
