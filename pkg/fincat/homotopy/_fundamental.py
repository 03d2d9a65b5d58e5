from collections import deque
import logging

from fincat.category import FiniteCategory, Functor, identity_functor
from fincat.errors import DisconnectedBasepoint, RelatorViolation, ResourceLimit
from fincat.group import (
    abelianization,
    AbelianInvariants,
    canonical_relator,
    coset_enumeration,
    EnumeratedGroup,
    free_reduce,
    GroupPresentation,
    invert,
    PresentationHomomorphism,
    tietze_simplify,
)


logger = logging.getLogger(__name__)


def _basepoint_index(C: FiniteCategory, basepoint: str) -> int:
    if basepoint not in C.objects:
        raise DisconnectedBasepoint(
            f"basepoint {basepoint!r} is not an object of {C.name}")
    return C.object_index(basepoint)


def _spanning_tree(C: FiniteCategory, root: int, letter: dict) -> tuple:
    """Breadth-first tree over the undirected morphism graph.

    Returns the word of the tree path from ``root`` to every reached
    object, in composition order, and the tree edges.
    """
    incident = {}
    for m in C.nonidentity_indices():
        incident.setdefault(int(C.src[m]), []).append(int(m))
        if C.tgt[m] != C.src[m]:
            incident.setdefault(int(C.tgt[m]), []).append(int(m))
    path = {root: ()}
    edges = []
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for m in sorted(incident.get(x, ())):
            if C.src[m] == x and int(C.tgt[m]) not in path:
                y = int(C.tgt[m])
                path[y] = (letter[m],) + path[x]
            elif C.tgt[m] == x and int(C.src[m]) not in path:
                y = int(C.src[m])
                path[y] = (-letter[m],) + path[x]
            else:
                continue
            edges.append(m)
            queue.append(y)
    return path, edges


class _Pi1Data(object):
    """Presentation of the fundamental group together with its tree."""

    def __init__(self, C: FiniteCategory, basepoint: str):
        root = _basepoint_index(C, basepoint)
        component = next(c for c in C.components() if basepoint in c)
        inside = {C.object_index(x) for x in component}
        generators = [
            int(m) for m in C.nonidentity_indices() if int(C.src[m]) in inside]
        self.category = C
        self.basepoint = basepoint
        self.letter = {m: k + 1 for k, m in enumerate(generators)}
        self.path, self.tree = _spanning_tree(C, root, self.letter)
        identity = C.identity_mask()
        relators = []
        for g in generators:
            for f in generators:
                gf = C.table[g, f]
                if gf < 0:
                    continue
                if identity[gf]:
                    relators.append((self.letter[g], self.letter[f]))
                else:
                    relators.append(
                        (self.letter[g], self.letter[f], -self.letter[int(gf)]))
        relators.extend((self.letter[e],) for e in self.tree)
        self.presentation = GroupPresentation(
            [C.morphisms[m] for m in generators], relators, component=component)
        logger.debug(
            "pi1(%s, %s): %d generators, %d relators, %d tree edges",
            C.name, basepoint, len(generators), len(relators), len(self.tree))

    def loop(self, m: int) -> tuple:
        """Word of ``path[tgt]^-1 . m . path[src]``, a loop at the basepoint."""
        C = self.category
        return (
            invert(self.path[int(C.tgt[m])])
            + (self.letter[m],)
            + self.path[int(C.src[m])])

    def word(self, m: int) -> tuple:
        """Letter of a morphism, empty for identities."""
        return () if self.category.identity_mask()[m] else (self.letter[m],)


def pi1_presentation(C: FiniteCategory, basepoint: str) -> GroupPresentation:
    """Presentation of the fundamental group of the nerve of C.

    Generators are the non-identity morphisms of the basepoint's connected
    component. Relators are ``g f (gf)^-1`` for every composable pair
    (``g f`` when ``gf`` is an identity) and one letter per edge of the
    breadth-first spanning tree rooted at the basepoint.

    Parameters
    ----------
    C : FiniteCategory
        validated category
    basepoint : str
        object id

    Returns
    -------
    GroupPresentation
        ``component`` lists the objects the presentation covers

    Raises
    ------
    DisconnectedBasepoint
        the basepoint is not an object of C
    """
    return _Pi1Data(C, basepoint).presentation


def _killed_letters(P: GroupPresentation) -> set:
    return {abs(r[0]) for r in P.relators if len(r) == 1}


def _strip(word, killed) -> tuple:
    return free_reduce(x for x in word if abs(x) not in killed)


def _provably_trivial(word, P: GroupPresentation, known: set, group) -> bool:
    killed = _killed_letters(P)
    word = _strip(word, killed)
    if not word or canonical_relator(word) in known:
        return True
    if group is None:
        return False
    return group.evaluate(word) == group.identity


def induced_pi1_hom(
    F: Functor,
    basepoint: str,
    target_basepoint: str = None,
    path=None,
    max_cosets: int = None,
) -> PresentationHomomorphism:
    """Homomorphism of fundamental groups induced by a functor.

    A generator ``f: X -> Y`` stands for the loop ``p_Y^-1 f p_X`` along
    tree paths; its image is the word of ``F`` applied to that loop.

    Parameters
    ----------
    F : Functor
        valid functor
    basepoint : str
        object of the domain
    target_basepoint : str, optional
        basepoint of the codomain presentation, by default ``F(basepoint)``
    path : sequence of str, optional
        zigzag from ``target_basepoint`` to ``F(basepoint)`` in composition
        order, tokens ``m`` or ``m^-1``; the images are conjugated by it
    max_cosets : int, optional
        coset budget used when a relator image is not syntactically trivial

    Returns
    -------
    PresentationHomomorphism

    Raises
    ------
    RelatorViolation
        the image of a relator is not provably trivial within budget
    """
    source = _Pi1Data(F.dom, basepoint)
    image_point = F.on_object(basepoint)
    target = _Pi1Data(F.cod, image_point if target_basepoint is None else target_basepoint)
    if image_point not in target.presentation.component:
        raise DisconnectedBasepoint(
            f"{image_point!r} is not in the component of {target.basepoint!r}")

    def push(word):
        out = []
        for x in word:
            m = int(F.morphism_map[source_generators[abs(x) - 1]])
            image = target.word(m)
            out.extend(image if x > 0 else invert(image))
        return tuple(out)

    source_generators = sorted(source.letter, key=source.letter.get)
    conjugator = ()
    if path:
        tokens = GroupPresentation.from_labels(F.cod.morphisms, [path]).relators[0]
        conjugator = tuple(
            x for t in tokens for x in (
                target.word(t - 1) if t > 0 else invert(target.word(-t - 1))))
    images = []
    for m in source_generators:
        images.append(free_reduce(
            invert(conjugator) + push(source.loop(m)) + conjugator))
    hom = PresentationHomomorphism(source.presentation, target.presentation, images)

    known = {canonical_relator(_strip(r, _killed_letters(target.presentation)))
             for r in target.presentation.relators}
    group = None
    for r in source.presentation.relators:
        word = hom.apply(r)
        if _provably_trivial(word, target.presentation, known, None):
            continue
        if group is None:
            try:
                group = coset_enumeration(target.presentation, max_cosets=max_cosets)
            except ResourceLimit as error:
                raise RelatorViolation(
                    f"image of {source.presentation.format_word(r)} is not provably "
                    f"trivial ({error})", relator=source.presentation.format_word(r))
        if not _provably_trivial(word, target.presentation, known, group):
            raise RelatorViolation(
                f"image of {source.presentation.format_word(r)} is not trivial",
                relator=source.presentation.format_word(r))
    return hom


def change_basepoint(C: FiniteCategory, x: str, y: str) -> PresentationHomomorphism:
    """Isomorphism from the fundamental group at x to the one at y.

    Conjugates by the tree path of y's spanning tree, so both basepoints
    must lie in one connected component.
    """
    return induced_pi1_hom(identity_functor(C), x, target_basepoint=y)


class FundamentalGroup(object):
    """Fundamental group of a category at a basepoint.

    Attributes
    ----------
    presentation : GroupPresentation
        presentation read off the category
    simplified : GroupPresentation
        its Tietze simplification; ``images`` rewrites every morphism
    abelian : AbelianInvariants
        abelianization
    group : EnumeratedGroup or None
        enumerated group, None when enumeration ran out of cosets
    limit : ResourceLimit or None
        the exhausted budget when ``group`` is None
    """

    def __init__(
        self,
        presentation: GroupPresentation,
        simplified: GroupPresentation,
        abelian: AbelianInvariants,
        group: EnumeratedGroup = None,
        limit: ResourceLimit = None,
    ):
        self.presentation = presentation
        self.simplified = simplified
        self.abelian = abelian
        self.group = group
        self.limit = limit

    @property
    def order(self):
        return None if self.group is None else self.group.order

    @property
    def is_trivial(self):
        return self.order == 1

    def element(self, morphisms) -> int:
        """Element of the enumerated group given by a word of
        ``(morphism id, sign)`` pairs in composition order."""
        assert self.group is not None
        return self.group.evaluate(self.simplified.rewrite(morphisms))

    def to_dict(self) -> dict:
        out = {
            "presentation": self.presentation.to_dict(),
            "simplified": self.simplified.to_dict(),
            "abelianization": self.abelian.to_dict(),
            "order": self.order,
        }
        if self.group is not None:
            out["abelian"] = self.group.is_abelian()
        if self.limit is not None:
            out["exhausted"] = {"budget": self.limit.budget, "limit": self.limit.limit}
        return out


def fundamental_group(
    C: FiniteCategory,
    basepoint: str,
    max_cosets: int = None,
    tietze_steps: int = None,
) -> FundamentalGroup:
    """Presentation, simplification, abelianization and, within budget,
    the enumerated fundamental group of C at a basepoint."""
    presentation = pi1_presentation(C, basepoint)
    simplified = tietze_simplify(presentation, max_steps=tietze_steps)
    abelian = abelianization(simplified)
    group, limit = None, None
    try:
        group = coset_enumeration(simplified, max_cosets=max_cosets)
    except ResourceLimit as error:
        logger.warning(
            "pi1(%s, %s) did not enumerate: %s", C.name, basepoint, error)
        limit = error
    return FundamentalGroup(presentation, simplified, abelian, group, limit)
