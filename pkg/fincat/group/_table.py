from collections import deque
import logging

import numpy as np

from fincat.errors import InvalidGroup, NotNormal
from fincat.group._presentation import GroupPresentation
from fincat.group._smith import rank_and_torsion


logger = logging.getLogger(__name__)


class FiniteGroupTable(object):
    """Finite group given by its multiplication table.

    Attributes
    ----------
    elements : tuple of str
        element labels
    table : (n, n) np.ndarray
        ``table[a, b]`` is the index of ``a * b``
    identity : int
        index of the neutral element
    inverse : (n,) np.ndarray
        index of the inverse of each element
    """

    def __init__(self, elements, table, identity: int = None, validate: bool = True):
        self.elements = tuple(str(e) for e in elements)
        self.table = np.asarray(table, dtype=np.int64)
        n = len(self.elements)
        if self.table.shape != (n, n):
            raise InvalidGroup(
                f"table of shape {self.table.shape} for {n} elements")
        if n == 0:
            raise InvalidGroup("a group has at least one element")
        if identity is None:
            rows = np.flatnonzero((self.table == np.arange(n)).all(axis=1))
            if not len(rows):
                raise InvalidGroup("no neutral element")
            identity = int(rows[0])
        self.identity = identity
        hits = np.argwhere(self.table == identity)
        self.inverse = np.full(n, -1, dtype=np.int64)
        self.inverse[hits[:, 0]] = hits[:, 1]
        if validate:
            self.validate()
        self.table.setflags(write=False)
        self.inverse.setflags(write=False)

    @classmethod
    def from_operation(cls, elements, multiply, validate: bool = True):
        """Tabulate a binary operation on a list of hashable elements."""
        elements = list(elements)
        index = {e: i for i, e in enumerate(elements)}
        table = [[index[multiply(a, b)] for b in elements] for a in elements]
        return cls([str(e) for e in elements], table, validate=validate)

    def validate(self):
        n, t, e = self.order, self.table, self.identity
        if ((t < 0) | (t >= n)).any():
            raise InvalidGroup("table is not closed")
        if not ((t[e] == np.arange(n)).all() and (t[:, e] == np.arange(n)).all()):
            raise InvalidGroup("identity law fails", {"identity": self.elements[e]})
        bad = np.flatnonzero(
            (self.inverse < 0) | (t[np.arange(n), np.maximum(self.inverse, 0)] != e)
            | (t[np.maximum(self.inverse, 0), np.arange(n)] != e))
        if len(bad):
            raise InvalidGroup(
                "element without inverse", {"element": self.elements[bad[0]]})
        for a in range(n):
            # (a b) c == a (b c) for all b, c
            bad = np.argwhere(t[t[a]] != t[a][t])
            if len(bad):
                b, c = bad[0]
                raise InvalidGroup(
                    "associativity fails",
                    {"a": self.elements[a], "b": self.elements[b], "c": self.elements[c]})

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroupTable(order={self.order})"

    def multiply(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def product(self, elements) -> int:
        out = self.identity
        for a in elements:
            out = self.table[out, a]
        return int(out)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x, a]
            k += 1
        return k

    def element_orders(self) -> np.ndarray:
        return np.array([self.element_order(a) for a in range(self.order)])

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def generate(self, generators) -> np.ndarray:
        """Sorted indices of the subgroup generated by ``generators``."""
        generators = sorted(set(int(g) for g in generators))
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for g in generators:
                y = int(self.table[x, g])
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return np.array(sorted(seen), dtype=np.int64)

    def conjugate(self, a: int, b: int) -> int:
        """``b a b^-1``"""
        return int(self.table[self.table[b, a], self.inverse[b]])

    def normality_witness(self, subgroup):
        """First ``(h, g)`` with ``g h g^-1`` outside the subgroup, or None."""
        inside = np.zeros(self.order, dtype=bool)
        inside[np.asarray(subgroup, dtype=np.int64)] = True
        for h in subgroup:
            conjugates = self.table[self.table[:, h], self.inverse]
            outside = np.flatnonzero(~inside[conjugates])
            if len(outside):
                return int(h), int(outside[0])
        return None

    def normal_closure(self, generators) -> np.ndarray:
        conjugates = {
            self.conjugate(int(h), g)
            for h in generators for g in range(self.order)}
        return self.generate(conjugates)

    def subgroup_table(self, subgroup):
        """The subgroup as a group table in its own right."""
        subgroup = np.asarray(subgroup, dtype=np.int64)
        position = np.full(self.order, -1, dtype=np.int64)
        position[subgroup] = np.arange(len(subgroup))
        return FiniteGroupTable(
            [self.elements[h] for h in subgroup],
            position[self.table[np.ix_(subgroup, subgroup)]],
            identity=int(position[self.identity]),
        )

    def cosets(self, subgroup) -> np.ndarray:
        """Index of the left coset ``a H`` of every element, numbered by
        first appearance."""
        subgroup = np.asarray(subgroup, dtype=np.int64)
        coset_of = np.full(self.order, -1, dtype=np.int64)
        count = 0
        for a in range(self.order):
            if coset_of[a] < 0:
                coset_of[self.table[a, subgroup]] = count
                count += 1
        return coset_of

    def quotient(self, subgroup):
        """Quotient by a normal subgroup.

        Returns
        -------
        quotient : FiniteGroupTable
            labelled by the smallest element of each coset
        coset_of : np.ndarray
            coset index of every element
        """
        witness = self.normality_witness(subgroup)
        if witness is not None:
            h, g = witness
            raise NotNormal(
                "subgroup is not normal",
                {"element": self.elements[h], "conjugator": self.elements[g],
                 "conjugate": self.elements[self.conjugate(h, g)]})
        coset_of = self.cosets(subgroup)
        k = int(coset_of.max()) + 1
        representatives = np.array(
            [np.flatnonzero(coset_of == c)[0] for c in range(k)])
        table = coset_of[self.table[np.ix_(representatives, representatives)]]
        logger.debug("quotient of order %d by a subgroup of order %d", k, len(subgroup))
        quotient = FiniteGroupTable(
            [self.elements[r] for r in representatives], table,
            identity=int(coset_of[self.identity]))
        return quotient, coset_of

    def commutator_subgroup(self) -> np.ndarray:
        commutators = {
            int(self.table[self.table[a, b], self.table[self.inverse[a], self.inverse[b]]])
            for a in range(self.order) for b in range(a + 1, self.order)}
        return self.normal_closure(commutators | {self.identity})

    def abelian_invariants(self) -> list:
        """Invariant factors (> 1) of the abelianization."""
        quotient, _ = self.quotient(self.commutator_subgroup())
        if quotient.order == 1:
            return []
        presentation = quotient.presentation()
        _, torsion = rank_and_torsion(presentation.relator_matrix())
        return torsion

    def presentation(self):
        """Multiplication-table presentation on the non-identity elements."""
        others = [a for a in range(self.order) if a != self.identity]
        letter = {a: k + 1 for k, a in enumerate(others)}
        relators = []
        for a in others:
            for b in others:
                c = int(self.table[a, b])
                word = (letter[a], letter[b])
                relators.append(word if c == self.identity else word + (-letter[c],))
        return GroupPresentation([self.elements[a] for a in others], relators)

    def generators(self) -> list:
        """Greedy generating set, elements of largest order first."""
        orders = self.element_orders()
        candidates = sorted(range(self.order), key=lambda a: (-orders[a], a))
        chosen = []
        span = self.generate([])
        for a in candidates:
            if len(span) == self.order:
                break
            if a not in set(span.tolist()):
                chosen.append(a)
                span = self.generate(chosen)
        return chosen

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "elements": list(self.elements),
            "abelian": self.is_abelian(),
        }
