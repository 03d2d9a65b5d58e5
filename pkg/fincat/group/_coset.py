from collections import deque
import logging

import numpy as np

from fincat.config import config, StepBudget
from fincat.errors import ResourceLimit
from fincat.group._presentation import GroupPresentation
from fincat.group._table import FiniteGroupTable


logger = logging.getLogger(__name__)


def _column(x: int) -> int:
    # generator k -> column 2(k-1), its inverse -> 2(k-1) + 1
    return 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1


class EnumeratedGroup(FiniteGroupTable):
    """Group table produced by coset enumeration.

    Element ``i`` is the coset reached from the base coset by ``words[i]``,
    so ``table[i, j]`` is the element of ``words[i] + words[j]``.

    Attributes
    ----------
    presentation : GroupPresentation
        the enumerated presentation
    words : tuple of tuple
        shortest representative word of every element
    action : (2 * n_generators, order) np.ndarray
        right action of each letter on the elements
    """

    def __init__(self, presentation: GroupPresentation, words, action, table):
        super().__init__(
            [presentation.format_word(w) for w in words], table,
            identity=0, validate=False)
        self.presentation = presentation
        self.words = tuple(words)
        self.action = action

    def evaluate(self, word) -> int:
        """Element represented by a word in the presentation's letters."""
        c = 0
        for x in word:
            c = self.action[_column(x), c]
        return int(c)


class _CosetTable(object):

    def __init__(self, width: int, max_cosets: int, budget: StepBudget):
        self.width = width
        self.max_cosets = max_cosets
        self.budget = budget
        self.labels = []
        self.rows = []
        self.live = 0

    def new(self) -> int:
        c = len(self.labels)
        self.labels.append(c)
        self.rows.append([-1] * self.width)
        self.live += 1
        self.budget.tick()
        if self.live > self.max_cosets:
            raise ResourceLimit(
                "max_cosets", self.max_cosets,
                f"coset enumeration exceeded {self.max_cosets} live cosets")
        return c

    def find(self, c: int) -> int:
        root = c
        while self.labels[root] != root:
            root = self.labels[root]
        while self.labels[c] != root:
            self.labels[c], c = root, self.labels[c]
        return root

    def unify(self, a: int, b: int):
        stack = [(a, b)]
        while stack:
            a, b = stack.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            if a > b:
                a, b = b, a
            self.labels[b] = a
            self.live -= 1
            row_a, row_b = self.rows[a], self.rows[b]
            for d in range(self.width):
                if row_b[d] < 0:
                    continue
                if row_a[d] < 0:
                    row_a[d] = row_b[d]
                else:
                    stack.append((row_a[d], row_b[d]))

    def follow(self, c: int, d: int) -> int:
        c = self.find(c)
        target = self.rows[c][d]
        if target < 0:
            target = self.new()
            self.rows[c][d] = target
            self.rows[target][d ^ 1] = c
        return self.find(target)


def coset_enumeration(P: GroupPresentation, max_cosets: int = None) -> EnumeratedGroup:
    """Enumerate the cosets of the trivial subgroup (HLT strategy).

    Parameters
    ----------
    P : GroupPresentation
        finite presentation
    max_cosets : int, optional
        cap on simultaneously live cosets, by default ``config.max_cosets``

    Returns
    -------
    EnumeratedGroup
        regular representation of the presented group

    Raises
    ------
    ResourceLimit
        more live cosets than allowed; the group may be infinite
    """
    limit = config.max_cosets if max_cosets is None else max_cosets
    assert limit >= 1, limit
    width = 2 * P.n_generators
    relators = [[_column(x) for x in r] for r in P.relators]
    cosets = _CosetTable(width, limit, StepBudget())
    cosets.new()
    i = 0
    while i < len(cosets.rows):
        if cosets.find(i) == i:
            for r in relators:
                c = i
                for d in r:
                    c = cosets.follow(c, d)
                cosets.unify(c, i)
                if cosets.find(i) != i:
                    break
            if cosets.find(i) == i:
                for d in range(width):
                    cosets.follow(i, d)
        i += 1

    live = [c for c in range(len(cosets.rows)) if cosets.find(c) == c]
    position = {c: k for k, c in enumerate(live)}
    action = np.array(
        [[position[cosets.find(cosets.rows[c][d])] for c in live]
         for d in range(width)], dtype=np.int64).reshape(width, len(live))

    # shortest words by breadth-first search from the base coset
    words = {0: ()}
    parent = {}
    queue = deque([0])
    order = [0]
    while queue:
        c = queue.popleft()
        for d in range(width):
            e = int(action[d, c])
            if e not in words:
                letter = d // 2 + 1 if d % 2 == 0 else -(d // 2 + 1)
                words[e] = words[c] + (letter,)
                parent[e] = (c, d)
                order.append(e)
                queue.append(e)
    # relabel so that element k is the k-th coset found
    relabel = np.empty(len(live), dtype=np.int64)
    relabel[order] = np.arange(len(live))
    action = relabel[action][:, order]
    columns = [np.arange(len(live))]
    for e in order[1:]:
        c, d = parent[e]
        columns.append(action[d][columns[relabel[c]]])
    table = np.stack(columns, axis=1)
    logger.debug(
        "coset enumeration: order %d, %d cosets defined", len(live), len(cosets.rows))
    return EnumeratedGroup(P, [words[e] for e in order], action, table)
