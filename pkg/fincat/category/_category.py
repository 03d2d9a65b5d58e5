import logging
from collections.abc import Mapping

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from fincat.errors import (
    BrokenAssociativity,
    BrokenIdentity,
    DanglingReference,
    IllTypedComposite,
    MissingComposite,
    ValidationError,
)


logger = logging.getLogger(__name__)

UNDEFINED = -1


class FiniteCategory(object):
    """Finite category given by an explicit composition table.

    Objects and morphisms are opaque string ids, kept in lexicographic
    order so that every derived enumeration is reproducible.

    Attributes
    ----------
    objects : tuple of str
        object ids, sorted
    morphisms : tuple of str
        morphism ids, sorted
    src, tgt : (n_morphisms,) np.ndarray
        object index of the source and target of each morphism
    identity : (n_objects,) np.ndarray
        morphism index of the identity of each object
    table : (n_morphisms, n_morphisms) np.ndarray
        ``table[g, f]`` is the index of ``g . f`` or -1 when not composable
    """

    def __init__(
        self,
        objects,
        morphisms,
        identities: Mapping,
        compose,
        name: str = None,
    ):
        """Build and validate a finite category.

        Parameters
        ----------
        objects : iterable of str
            object ids
        morphisms : iterable
            ``(id, src, tgt)`` triples or ``{"id", "src", "tgt"}`` records
        identities : Mapping
            object id to the id of its identity morphism
        compose : Mapping or callable
            ``(g, f) -> g . f`` on composable pairs; pairs involving an
            identity may be omitted and are inferred
        name : str, optional
            display name
        """
        self.name = name
        objects = [str(x) for x in objects]
        self.objects = tuple(sorted(set(objects)))
        if len(self.objects) != len(objects):
            raise ValidationError("duplicate object ids", {"objects": objects})
        self._object_index = {x: i for i, x in enumerate(self.objects)}

        records = [self._as_record(m) for m in morphisms]
        ids = [r[0] for r in records]
        if len(set(ids)) != len(ids):
            duplicates = sorted({m for m in ids if ids.count(m) > 1})
            raise ValidationError("duplicate morphism ids", {"morphisms": duplicates})
        records.sort()
        self.morphisms = tuple(r[0] for r in records)
        self._morphism_index = {m: i for i, m in enumerate(self.morphisms)}
        self.src = np.array(
            [self._lookup_object(r[1], r[0]) for r in records], dtype=np.int64)
        self.tgt = np.array(
            [self._lookup_object(r[2], r[0]) for r in records], dtype=np.int64)

        self.identity = np.full(len(self.objects), UNDEFINED, dtype=np.int64)
        for x in self.objects:
            if x not in identities:
                raise ValidationError(
                    f"object {x!r} has no identity", {"object": x})
            i = self._object_index[x]
            e = self._lookup_morphism(identities[x])
            if self.src[e] != i or self.tgt[e] != i:
                raise BrokenIdentity(
                    f"identity {identities[x]!r} is not an endomorphism of {x!r}",
                    {"object": x, "morphism": identities[x]})
            self.identity[i] = e
        if len(set(self.identity.tolist())) != len(self.objects):
            raise BrokenIdentity("two objects share an identity morphism")

        self.table = self._build_table(compose)
        self._check_axioms()
        for array in (self.src, self.tgt, self.identity, self.table):
            array.setflags(write=False)

        self._homs = {}
        for m in range(len(self.morphisms)):
            self._homs.setdefault((self.src[m], self.tgt[m]), []).append(m)
        self._homs = {
            key: np.asarray(value, dtype=np.int64)
            for key, value in self._homs.items()}
        self._is_identity = np.zeros(len(self.morphisms), dtype=bool)
        self._is_identity[self.identity] = True
        self._is_identity.setflags(write=False)
        logger.debug(
            "validated category %s: %d objects, %d morphisms",
            name, len(self.objects), len(self.morphisms))

    @staticmethod
    def _as_record(m):
        if isinstance(m, Mapping):
            return (str(m["id"]), str(m["src"]), str(m["tgt"]))
        m_id, src, tgt = m
        return (str(m_id), str(src), str(tgt))

    def _lookup_object(self, x, referrer=None):
        try:
            return self._object_index[x]
        except KeyError:
            raise DanglingReference(
                f"unknown object {x!r}", {"object": x, "referrer": referrer})

    def _lookup_morphism(self, m):
        try:
            return self._morphism_index[m]
        except KeyError:
            raise DanglingReference(f"unknown morphism {m!r}", {"morphism": m})

    def _build_table(self, compose):
        n = len(self.morphisms)
        table = np.full((n, n), UNDEFINED, dtype=np.int64)
        identity_of = self.identity
        # identity laws are inferred; explicit entries must agree with them
        for f in range(n):
            table[identity_of[self.tgt[f]], f] = f
            table[f, identity_of[self.src[f]]] = f

        if isinstance(compose, Mapping):
            entries = (
                (self._lookup_morphism(g), self._lookup_morphism(f), h)
                for (g, f), h in compose.items())
        else:
            entries = (
                (g, f, compose(self.morphisms[g], self.morphisms[f]))
                for g in range(n) for f in range(n)
                if self.src[g] == self.tgt[f])

        for g, f, h in entries:
            pair = {"g": self.morphisms[g], "f": self.morphisms[f]}
            if self.src[g] != self.tgt[f]:
                raise IllTypedComposite(
                    f"composite given for non-composable pair {pair}", pair)
            if h is None:
                continue
            h = self._lookup_morphism(h)
            if self.src[h] != self.src[f] or self.tgt[h] != self.tgt[g]:
                raise IllTypedComposite(
                    f"composite {self.morphisms[h]!r} of {pair} has the wrong "
                    "source or target", dict(pair, gf=self.morphisms[h]))
            if table[g, f] != UNDEFINED and table[g, f] != h:
                raise BrokenIdentity(
                    f"composite of {pair} contradicts an identity law",
                    dict(pair, gf=self.morphisms[h]))
            table[g, f] = h
        return table

    def _check_axioms(self):
        composable = self.src[:, None] == self.tgt[None, :]
        missing = np.argwhere(composable & (self.table == UNDEFINED))
        if len(missing):
            g, f = missing[0]
            pair = (self.morphisms[g], self.morphisms[f])
            raise MissingComposite(
                f"no composite for {pair}", {"g": pair[0], "f": pair[1]})

        for f in range(len(self.morphisms)):
            left = self.table[self.identity[self.tgt[f]], f]
            right = self.table[f, self.identity[self.src[f]]]
            if left != f or right != f:
                raise BrokenIdentity(
                    f"identity law fails at {self.morphisms[f]!r}",
                    {"f": self.morphisms[f]})

        g_idx, f_idx = np.nonzero(composable)
        gf_idx = self.table[g_idx, f_idx]
        for h in range(len(self.morphisms)):
            mask = self.tgt[g_idx] == self.src[h]
            if not mask.any():
                continue
            g, f, gf = g_idx[mask], f_idx[mask], gf_idx[mask]
            bad = np.flatnonzero(self.table[h, gf] != self.table[self.table[h, g], f])
            if len(bad):
                k = bad[0]
                witness = {
                    "h": self.morphisms[h],
                    "g": self.morphisms[g[k]],
                    "f": self.morphisms[f[k]],
                }
                raise BrokenAssociativity(
                    f"associativity fails for {witness}", witness)

    def __repr__(self):
        return (
            f"FiniteCategory(name={self.name!r}, objects={len(self.objects)}, "
            f"morphisms={len(self.morphisms)})")

    def __eq__(self, other):
        if not isinstance(other, FiniteCategory):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.morphisms == other.morphisms
            and np.array_equal(self.src, other.src)
            and np.array_equal(self.tgt, other.tgt)
            and np.array_equal(self.identity, other.identity)
            and np.array_equal(self.table, other.table))

    def __hash__(self):
        return hash((self.objects, self.morphisms))

    @property
    def n_objects(self):
        return len(self.objects)

    @property
    def n_morphisms(self):
        return len(self.morphisms)

    def object_index(self, x: str) -> int:
        return self._lookup_object(x)

    def morphism_index(self, m: str) -> int:
        return self._lookup_morphism(m)

    def source(self, m: str) -> str:
        return self.objects[self.src[self._lookup_morphism(m)]]

    def target(self, m: str) -> str:
        return self.objects[self.tgt[self._lookup_morphism(m)]]

    def identity_of(self, x: str) -> str:
        return self.morphisms[self.identity[self._lookup_object(x)]]

    def is_identity(self, m: str) -> bool:
        return bool(self._is_identity[self._lookup_morphism(m)])

    def compose(self, g: str, f: str) -> str:
        """Return the id of ``g . f`` (first f, then g)."""
        h = self.table[self._lookup_morphism(g), self._lookup_morphism(f)]
        if h == UNDEFINED:
            raise ValueError(f"{g!r} and {f!r} are not composable")
        return self.morphisms[h]

    def hom(self, x: str, y: str) -> list:
        i, j = self._lookup_object(x), self._lookup_object(y)
        return [self.morphisms[m] for m in self.hom_indices(i, j)]

    # index-level access used by the deciders

    def hom_indices(self, i: int, j: int) -> np.ndarray:
        return self._homs.get((i, j), np.zeros(0, dtype=np.int64))

    def out_indices(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.src == i)

    def in_indices(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.tgt == i)

    def identity_mask(self) -> np.ndarray:
        return self._is_identity

    def nonidentity_indices(self) -> np.ndarray:
        return np.flatnonzero(~self._is_identity)

    def inverse_indices(self) -> np.ndarray:
        """Index of the inverse of each morphism, -1 if not invertible."""
        if not hasattr(self, "_inverse"):
            inverse = np.full(self.n_morphisms, UNDEFINED, dtype=np.int64)
            for f in range(self.n_morphisms):
                back = self.hom_indices(self.tgt[f], self.src[f])
                hit = back[
                    (self.table[back, f] == self.identity[self.src[f]])
                    & (self.table[f, back] == self.identity[self.tgt[f]])]
                if len(hit):
                    inverse[f] = hit[0]
            inverse.setflags(write=False)
            self._inverse = inverse
        return self._inverse

    def hom_counts(self) -> np.ndarray:
        """(n_objects, n_objects) array of hom-set sizes."""
        counts = np.zeros((self.n_objects, self.n_objects), dtype=np.int64)
        np.add.at(counts, (self.src, self.tgt), 1)
        return counts

    def components(self) -> list:
        """Connected components as sorted lists of object ids.

        Components are ordered by their smallest object id.
        """
        if not self.n_objects:
            return []
        adjacency = coo_matrix(
            (np.ones(self.n_morphisms), (self.src, self.tgt)),
            shape=(self.n_objects, self.n_objects))
        _, labels = connected_components(adjacency, directed=False)
        groups = {}
        for i, label in enumerate(labels):
            groups.setdefault(label, []).append(self.objects[i])
        return sorted(groups.values())

    def composition_entries(self, include_identities: bool = False):
        """Yield ``(g, f, g . f)`` id triples in index order."""
        g_idx, f_idx = np.nonzero(self.table != UNDEFINED)
        for g, f in zip(g_idx, f_idx):
            if not include_identities and (self._is_identity[g] or self._is_identity[f]):
                continue
            yield self.morphisms[g], self.morphisms[f], self.morphisms[self.table[g, f]]

    def to_dict(self) -> dict:
        """Serialize to the input format read by ``validate_category``."""
        return {
            "name": self.name,
            "objects": list(self.objects),
            "morphisms": [
                {"id": m, "src": self.objects[s], "tgt": self.objects[t]}
                for m, s, t in zip(self.morphisms, self.src, self.tgt)],
            "identities": {
                x: self.morphisms[e] for x, e in zip(self.objects, self.identity)},
            "compose": [list(entry) for entry in self.composition_entries()],
        }

    def full_subcategory(self, objects, name: str = None):
        """Full subcategory on the given object ids."""
        keep = sorted(set(objects))
        index = [self._lookup_object(x) for x in keep]
        morphisms = [
            (self.morphisms[m], self.objects[self.src[m]], self.objects[self.tgt[m]])
            for i in index for j in index for m in self.hom_indices(i, j)]
        kept = {m[0] for m in morphisms}
        compose = {
            (g, f): h for g, f, h in self.composition_entries()
            if g in kept and f in kept}
        return FiniteCategory(
            keep,
            morphisms,
            {x: self.identity_of(x) for x in keep},
            compose,
            name=name,
        )


def validate_category(raw: Mapping) -> FiniteCategory:
    """Validate a raw category description.

    Parameters
    ----------
    raw : Mapping
        ``{"name", "objects", "morphisms", "compose"}`` with ``compose`` a
        list of ``[g, f, gf]`` entries and an optional ``identities``
        mapping; identities default to ``"1_<object>"`` and are added to
        the morphism list when absent

    Returns
    -------
    FiniteCategory
        the validated category
    """
    for key in ("objects", "morphisms"):
        if key not in raw:
            raise ValidationError(f"category description lacks {key!r}", {"key": key})
    objects = [str(x) for x in raw["objects"]]
    morphisms = [FiniteCategory._as_record(m) for m in raw["morphisms"]]
    identities = {str(k): str(v) for k, v in dict(raw.get("identities", {})).items()}
    known = {m[0] for m in morphisms}
    for x in objects:
        identities.setdefault(x, f"1_{x}")
        if identities[x] not in known:
            morphisms.append((identities[x], x, x))
            known.add(identities[x])
    compose = {}
    for entry in raw.get("compose", []):
        if len(entry) != 3:
            raise ValidationError(
                "compose entries must be [g, f, gf]", {"entry": list(entry)})
        g, f, h = (str(e) for e in entry)
        if (g, f) in compose and compose[g, f] != h:
            raise ValidationError(
                f"two composites given for {(g, f)}",
                {"g": g, "f": f, "composites": [compose[g, f], h]})
        compose[g, f] = h
    return FiniteCategory(objects, morphisms, identities, compose, name=raw.get("name"))
