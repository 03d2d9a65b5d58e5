from collections.abc import Mapping

import numpy as np

from fincat.category._category import FiniteCategory, UNDEFINED
from fincat.errors import InvalidFunctor, NaturalityFailure, ShapeMismatch


def _pairs(mapping):
    if isinstance(mapping, Mapping):
        return mapping.items()
    return [tuple(pair) for pair in mapping]


class Functor(object):
    """Functor between finite categories.

    Attributes
    ----------
    dom, cod : FiniteCategory
        domain and codomain
    object_map : (dom.n_objects,) np.ndarray
        index of the image of each object
    morphism_map : (dom.n_morphisms,) np.ndarray
        index of the image of each morphism
    """

    def __init__(
        self,
        dom: FiniteCategory,
        cod: FiniteCategory,
        on_objects,
        on_morphisms,
        name: str = None,
        validate: bool = True,
    ):
        """Build a functor from id mappings.

        Parameters
        ----------
        dom, cod : FiniteCategory
            domain and codomain
        on_objects : Mapping or iterable of pairs
            object id to object id
        on_morphisms : Mapping or iterable of pairs
            morphism id to morphism id; identities may be omitted
        name : str, optional
            display name
        validate : bool, optional
            raise InvalidFunctor unless the data is a functor
            (the default is True)
        """
        self.dom = dom
        self.cod = cod
        self.name = name
        self.object_map = np.full(dom.n_objects, UNDEFINED, dtype=np.int64)
        self.morphism_map = np.full(dom.n_morphisms, UNDEFINED, dtype=np.int64)
        for x, y in _pairs(on_objects):
            self.object_map[self._index(dom.object_index, x)] = (
                self._index(cod.object_index, y))
        for m, n in _pairs(on_morphisms):
            self.morphism_map[self._index(dom.morphism_index, m)] = (
                self._index(cod.morphism_index, n))
        missing = np.flatnonzero(self.object_map == UNDEFINED)
        if len(missing):
            raise InvalidFunctor(
                f"functor {name!r} does not map object {dom.objects[missing[0]]!r}",
                {"object": dom.objects[missing[0]]})
        identities = dom.identity
        unset = self.morphism_map[identities] == UNDEFINED
        self.morphism_map[identities[unset]] = cod.identity[self.object_map[unset]]
        missing = np.flatnonzero(self.morphism_map == UNDEFINED)
        if len(missing):
            raise InvalidFunctor(
                f"functor {name!r} does not map morphism "
                f"{dom.morphisms[missing[0]]!r}",
                {"morphism": dom.morphisms[missing[0]]})
        self.object_map.setflags(write=False)
        self.morphism_map.setflags(write=False)
        if validate:
            self.validate()

    def _index(self, lookup, key):
        try:
            return lookup(str(key))
        except ValueError as e:
            raise InvalidFunctor(
                f"functor {self.name!r}: {e}", getattr(e, "witness", None))

    @classmethod
    def from_arrays(
        cls,
        dom: FiniteCategory,
        cod: FiniteCategory,
        object_map,
        morphism_map,
        name: str = None,
        validate: bool = True,
    ):
        """Build a functor from index arrays."""
        return cls(
            dom,
            cod,
            {x: cod.objects[i] for x, i in zip(dom.objects, object_map)},
            {m: cod.morphisms[i] for m, i in zip(dom.morphisms, morphism_map)},
            name=name,
            validate=validate,
        )

    def find_violation(self):
        """Return a witness of the first broken functor law, or None."""
        dom, cod = self.dom, self.cod
        fo, fm = self.object_map, self.morphism_map
        bad = np.flatnonzero(
            (cod.src[fm] != fo[dom.src]) | (cod.tgt[fm] != fo[dom.tgt]))
        if len(bad):
            m = bad[0]
            return {
                "law": "source/target",
                "morphism": dom.morphisms[m],
                "image": cod.morphisms[fm[m]],
            }
        bad = np.flatnonzero(fm[dom.identity] != cod.identity[fo])
        if len(bad):
            x = bad[0]
            return {
                "law": "identity",
                "object": dom.objects[x],
                "image": cod.morphisms[fm[dom.identity[x]]],
            }
        g, f = np.nonzero(dom.table != UNDEFINED)
        bad = np.flatnonzero(fm[dom.table[g, f]] != cod.table[fm[g], fm[f]])
        if len(bad):
            k = bad[0]
            return {
                "law": "composition",
                "g": dom.morphisms[g[k]],
                "f": dom.morphisms[f[k]],
            }
        return None

    def validate(self):
        witness = self.find_violation()
        if witness is not None:
            raise InvalidFunctor(
                f"{self.name or 'functor'} breaks the {witness['law']} law",
                witness)

    def agrees_with(self, other) -> bool:
        """True when both functors have the same shape and action."""
        return (
            self.dom == other.dom
            and self.cod == other.cod
            and np.array_equal(self.object_map, other.object_map)
            and np.array_equal(self.morphism_map, other.morphism_map))

    def on_object(self, x: str) -> str:
        return self.cod.objects[self.object_map[self.dom.object_index(x)]]

    def on_morphism(self, m: str) -> str:
        return self.cod.morphisms[self.morphism_map[self.dom.morphism_index(m)]]

    def __repr__(self):
        return f"Functor({self.name!r}: {self.dom.name} -> {self.cod.name})"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "dom": self.dom.name,
            "cod": self.cod.name,
            "objects": [
                [x, self.cod.objects[i]]
                for x, i in zip(self.dom.objects, self.object_map)],
            "morphisms": [
                [m, self.cod.morphisms[i]]
                for m, i in zip(self.dom.morphisms, self.morphism_map)
                if not self.dom.is_identity(m)],
        }


class NaturalTransformation(object):
    """Natural transformation between two parallel functors.

    Attributes
    ----------
    source, target : Functor
        parallel functors
    component_map : (dom.n_objects,) np.ndarray
        index of the component at each object
    """

    def __init__(
        self,
        source: Functor,
        target: Functor,
        components,
        name: str = None,
        validate: bool = True,
    ):
        if source.dom != target.dom or source.cod != target.cod:
            raise ShapeMismatch(
                f"transformation {name!r} joins functors of different shape",
                {"source": source.name, "target": target.name})
        self.source = source
        self.target = target
        self.name = name
        dom, cod = source.dom, source.cod
        self.component_map = np.full(dom.n_objects, UNDEFINED, dtype=np.int64)
        for x, m in _pairs(components):
            try:
                self.component_map[dom.object_index(str(x))] = (
                    cod.morphism_index(str(m)))
            except ValueError as e:
                raise NaturalityFailure(
                    f"transformation {name!r}: {e}", getattr(e, "witness", None))
        missing = np.flatnonzero(self.component_map == UNDEFINED)
        if len(missing):
            raise NaturalityFailure(
                f"transformation {name!r} has no component at "
                f"{dom.objects[missing[0]]!r}",
                {"object": dom.objects[missing[0]]})
        self.component_map.setflags(write=False)
        if validate:
            self.validate()

    @property
    def dom(self) -> FiniteCategory:
        return self.source.dom

    @property
    def cod(self) -> FiniteCategory:
        return self.source.cod

    def component(self, x: str) -> str:
        return self.cod.morphisms[self.component_map[self.dom.object_index(x)]]

    def find_violation(self):
        """Return the first non-commuting square (or mistyped component)."""
        dom, cod = self.dom, self.cod
        alpha = self.component_map
        bad = np.flatnonzero(
            (cod.src[alpha] != self.source.object_map)
            | (cod.tgt[alpha] != self.target.object_map))
        if len(bad):
            x = bad[0]
            return {
                "object": dom.objects[x],
                "component": cod.morphisms[alpha[x]],
                "reason": "component has the wrong source or target",
            }
        left = cod.table[self.target.morphism_map, alpha[dom.src]]
        right = cod.table[alpha[dom.tgt], self.source.morphism_map]
        bad = np.flatnonzero(left != right)
        if len(bad):
            f = bad[0]
            return {
                "morphism": dom.morphisms[f],
                "src": dom.objects[dom.src[f]],
                "tgt": dom.objects[dom.tgt[f]],
                "target_then_component": cod.morphisms[left[f]],
                "component_then_source": cod.morphisms[right[f]],
            }
        return None

    def validate(self):
        witness = self.find_violation()
        if witness is not None:
            raise NaturalityFailure(
                f"{self.name or 'transformation'} is not natural", witness)

    def __repr__(self):
        return (
            f"NaturalTransformation({self.name!r}: "
            f"{self.source.name} => {self.target.name})")

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "source": self.source.name,
            "target": self.target.name,
            "components": [
                [x, self.cod.morphisms[m]]
                for x, m in zip(self.dom.objects, self.component_map)],
        }


def identity_functor(C: FiniteCategory) -> Functor:
    return Functor.from_arrays(
        C, C, np.arange(C.n_objects), np.arange(C.n_morphisms),
        name=f"id_{C.name}", validate=False)


def compose_functors(G: Functor, F: Functor, name: str = None) -> Functor:
    """Composite ``G . F`` (first F, then G)."""
    if F.cod != G.dom:
        raise ShapeMismatch(
            "functors are not composable", {"F": F.name, "G": G.name})
    return Functor.from_arrays(
        F.dom,
        G.cod,
        G.object_map[F.object_map],
        G.morphism_map[F.morphism_map],
        name=name or f"{G.name}.{F.name}",
        validate=False,
    )


def constant_functor(C: FiniteCategory, D: FiniteCategory, y: str) -> Functor:
    j = D.object_index(y)
    return Functor.from_arrays(
        C,
        D,
        np.full(C.n_objects, j),
        np.full(C.n_morphisms, D.identity[j]),
        name=f"const_{y}",
        validate=False,
    )


def identity_transformation(F: Functor) -> NaturalTransformation:
    cod = F.cod
    return NaturalTransformation(
        F, F,
        {x: cod.morphisms[cod.identity[i]]
         for x, i in zip(F.dom.objects, F.object_map)},
        name=f"id_{F.name}",
    )
