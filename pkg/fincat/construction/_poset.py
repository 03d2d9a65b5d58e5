from collections.abc import Mapping
from itertools import combinations
import logging

import numpy as np

from fincat.category import (
    compose_functors,
    FiniteCategory,
    Functor,
    identity_functor,
    NaturalTransformation,
)
from fincat.errors import InvalidPoset


logger = logging.getLogger(__name__)


def _transitive_closure(leq: np.ndarray) -> np.ndarray:
    leq = leq.copy()
    while True:
        step = leq | ((leq.astype(np.int64) @ leq.astype(np.int64)) > 0)
        if (step == leq).all():
            return leq
        leq = step


def leq_id(a: str, b: str) -> str:
    return f"{a}<={b}"


class Poset(object):
    """Finite partially ordered set.

    Attributes
    ----------
    elements : tuple of str
        element ids
    leq : (n, n) np.ndarray of bool
        ``leq[i, j]`` iff element i is below element j
    """

    def __init__(self, elements, leq: np.ndarray):
        self.elements = tuple(str(e) for e in elements)
        if len(set(self.elements)) != len(self.elements):
            raise InvalidPoset("duplicate elements", {"elements": list(self.elements)})
        self.leq = np.asarray(leq, dtype=bool)
        n = len(self.elements)
        if self.leq.shape != (n, n):
            raise InvalidPoset(f"relation of shape {self.leq.shape} for {n} elements")
        self._index = {e: i for i, e in enumerate(self.elements)}
        self.validate()
        self.leq.setflags(write=False)

    @classmethod
    def from_relation(cls, elements, pairs, closure: bool = True):
        """Poset from ``(a, b)`` pairs meaning a <= b.

        With ``closure`` the reflexive and transitive closure is taken;
        otherwise the pairs must already form a partial order.
        """
        elements = [str(e) for e in elements]
        index = {e: i for i, e in enumerate(elements)}
        leq = np.zeros((len(elements), len(elements)), dtype=bool)
        for a, b in pairs:
            a, b = str(a), str(b)
            if a not in index or b not in index:
                raise InvalidPoset(
                    f"relation mentions unknown element in ({a}, {b})",
                    {"pair": [a, b]})
            leq[index[a], index[b]] = True
        if closure:
            np.fill_diagonal(leq, True)
            leq = _transitive_closure(leq)
        return cls(elements, leq)

    def validate(self):
        n = len(self.elements)
        missing = np.flatnonzero(~np.diag(self.leq))
        if len(missing):
            raise InvalidPoset(
                "relation is not reflexive", {"element": self.elements[missing[0]]})
        both = np.argwhere(self.leq & self.leq.T & ~np.eye(n, dtype=bool))
        if len(both):
            a, b = both[0]
            raise InvalidPoset(
                "relation is not antisymmetric",
                {"pair": [self.elements[a], self.elements[b]]})
        through = (self.leq.astype(np.int64) @ self.leq.astype(np.int64)) > 0
        broken = np.argwhere(through & ~self.leq)
        if len(broken):
            a, c = broken[0]
            raise InvalidPoset(
                "relation is not transitive",
                {"pair": [self.elements[a], self.elements[c]]})

    def __len__(self):
        return len(self.elements)

    def index(self, e: str) -> int:
        return self._index[e]

    def is_leq(self, a: str, b: str) -> bool:
        return bool(self.leq[self._index[a], self._index[b]])

    def covers(self) -> list:
        """Pairs ``(a, b)`` with a < b and nothing strictly between."""
        strict = self.leq & ~np.eye(len(self.elements), dtype=bool)
        between = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
        return [
            (self.elements[i], self.elements[j])
            for i, j in np.argwhere(strict & ~between)]

    def maximal_chains(self) -> list:
        """Maximal chains, each listed bottom to top."""
        strict = self.leq & ~np.eye(len(self.elements), dtype=bool)
        cover = strict & ~((strict.astype(np.int64) @ strict.astype(np.int64)) > 0)
        minimal = np.flatnonzero(~strict.any(axis=0))
        chains = []
        stack = [(int(m),) for m in minimal[::-1]]
        while stack:
            chain = stack.pop()
            above = np.flatnonzero(cover[chain[-1]])
            if not len(above):
                chains.append(tuple(self.elements[i] for i in chain))
            stack.extend(chain + (int(b),) for b in above[::-1])
        return chains

    def category(self, name: str = None) -> FiniteCategory:
        """Category with one morphism ``a<=b`` per comparable pair."""
        pairs = [(self.elements[i], self.elements[j]) for i, j in np.argwhere(self.leq)]
        morphisms = [
            ("1_" + a if a == b else leq_id(a, b), a, b) for a, b in pairs]
        identities = {a: "1_" + a for a in self.elements}
        leq = self.leq
        compose = {}
        for i, j in np.argwhere(leq & ~np.eye(len(self.elements), dtype=bool)):
            for k in np.flatnonzero(leq[j]):
                if k == j:
                    continue
                a, b, c = self.elements[i], self.elements[j], self.elements[k]
                compose[leq_id(b, c), leq_id(a, b)] = leq_id(a, c)
        return FiniteCategory(self.elements, morphisms, identities, compose, name=name)

    def to_dict(self) -> dict:
        return {
            "elements": list(self.elements),
            "leq": [list(pair) for pair in self.covers()],
        }


def boolean_lattice(atoms) -> Poset:
    """Subsets of ``atoms`` ordered by inclusion, written ``{a,b}``."""
    atoms = [str(a) for a in atoms]
    subsets = [
        frozenset(c) for k in range(len(atoms) + 1)
        for c in combinations(atoms, k)]
    names = ["{" + ",".join(sorted(s)) + "}" for s in subsets]
    leq = np.array([[s <= t for t in subsets] for s in subsets], dtype=bool)
    return Poset(names, leq)


def closure_adjunction(P: Poset, closure: Mapping, name: str = None) -> tuple:
    """Closure operator ``c`` on P as a pair of functors with unit.

    Parameters
    ----------
    P : Poset
        the poset
    closure : Mapping
        element to its closure; must be monotone, extensive and idempotent

    Returns
    -------
    F : Functor
        ``c`` from P onto its closed elements
    G : Functor
        inclusion of the closed elements
    unit : NaturalTransformation
        ``x <= c(x)``, from the identity of P to ``G F``
    counit : NaturalTransformation
        identity of ``F G``

    Raises
    ------
    InvalidPoset
        ``closure`` is not a closure operator
    """
    c = {str(x): str(y) for x, y in closure.items()}
    for x in P.elements:
        if x not in c or c[x] not in P.elements:
            raise InvalidPoset(f"closure is undefined at {x}", {"element": x})
    for x in P.elements:
        if not P.is_leq(x, c[x]) or c[c[x]] != c[x]:
            raise InvalidPoset(
                f"closure is not extensive and idempotent at {x}", {"element": x})
        for y in P.elements:
            if P.is_leq(x, y) and not P.is_leq(c[x], c[y]):
                raise InvalidPoset(
                    "closure is not monotone", {"pair": [x, y]})
    closed = [x for x in P.elements if c[x] == x]
    keep = [P.index(x) for x in closed]
    Q = Poset(closed, P.leq[np.ix_(keep, keep)])
    source = P.category(name=name)
    target = Q.category(name=None if name is None else name + "^c")

    def arrow(a, b):
        return "1_" + a if a == b else leq_id(a, b)

    F = Functor(
        source, target, c,
        {arrow(a, b): arrow(c[a], c[b]) for a, b in (
            (source.source(m), source.target(m)) for m in source.morphisms)},
        name="closure")
    G = Functor(
        target, source, {x: x for x in closed},
        {m: m for m in target.morphisms}, name="inclusion")
    GF, FG = compose_functors(G, F), compose_functors(F, G)
    unit = NaturalTransformation(
        identity_functor(source), GF,
        {x: arrow(x, c[x]) for x in P.elements}, name="unit")
    counit = NaturalTransformation(
        FG, identity_functor(target),
        {x: arrow(x, x) for x in closed}, name="counit")
    logger.debug("closure operator with %d of %d closed elements", len(closed), len(P))
    return F, G, unit, counit
