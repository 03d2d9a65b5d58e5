from collections.abc import Mapping

import numpy as np
import scipy.sparse as sp

from fincat.errors import ValidationError


def invert(word: tuple) -> tuple:
    return tuple(-x for x in reversed(word))


def free_reduce(word) -> tuple:
    """Cancel adjacent ``x x^-1`` pairs."""
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(word) -> tuple:
    word = free_reduce(word)
    start, stop = 0, len(word)
    while stop - start > 1 and word[start] == -word[stop - 1]:
        start += 1
        stop -= 1
    return word[start:stop]


def canonical_relator(word) -> tuple:
    """Representative of a relator up to rotation and inversion."""
    word = cyclic_reduce(word)
    if not word:
        return word
    candidates = []
    for w in (word, invert(word)):
        candidates.extend(w[i:] + w[:i] for i in range(len(w)))
    return min(candidates)


class GroupPresentation(object):
    """Finitely presented group.

    Words are tuples of nonzero ints: ``k`` stands for generator ``k - 1``
    and ``-k`` for its inverse.

    Attributes
    ----------
    generators : tuple of str
        generator labels
    relators : tuple of tuple
        relator words
    images : dict
        label of a generator of an earlier presentation to a word in this
        one; empty unless produced by a rewriting step
    exhausted : bool
        True when simplification stopped on its budget
    """

    def __init__(
        self,
        generators,
        relators=(),
        images: Mapping = None,
        exhausted: bool = False,
        component=None,
    ):
        self.generators = tuple(str(g) for g in generators)
        if len(set(self.generators)) != len(self.generators):
            raise ValidationError(
                "duplicate generator labels", {"generators": list(self.generators)})
        n = len(self.generators)
        relators = tuple(tuple(int(x) for x in r) for r in relators)
        for r in relators:
            if any(x == 0 or abs(x) > n for x in r):
                raise ValidationError(
                    "relator mentions an undeclared generator",
                    {"relator": list(r), "generators": n})
        self.relators = relators
        self.images = {} if images is None else dict(images)
        self.exhausted = exhausted
        self.component = None if component is None else list(component)
        self._index = {g: k for k, g in enumerate(self.generators)}

    @classmethod
    def from_labels(cls, generators, relators, **kwargs):
        """Build from relators written as lists of ``label`` or ``label^-1``."""
        index = {str(g): k + 1 for k, g in enumerate(generators)}
        words = []
        for r in relators:
            word = []
            for token in r:
                token = str(token)
                sign = 1
                if token.endswith("^-1"):
                    token, sign = token[:-3], -1
                if token not in index:
                    raise ValidationError(
                        f"unknown generator {token!r}", {"relator": list(r)})
                word.append(sign * index[token])
            words.append(tuple(word))
        return cls(generators, words, **kwargs)

    @property
    def n_generators(self) -> int:
        return len(self.generators)

    @property
    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def relator_matrix(self) -> sp.csr_matrix:
        """Exponent sums, one row per relator and one column per generator."""
        rows, cols, data = [], [], []
        for i, r in enumerate(self.relators):
            for x in r:
                rows.append(i)
                cols.append(abs(x) - 1)
                data.append(1 if x > 0 else -1)
        return sp.csr_matrix(
            (np.array(data, dtype=np.int64),
             (np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64))),
            shape=(len(self.relators), self.n_generators))

    def letter(self, label: str, inverse: bool = False) -> int:
        k = self._index[label] + 1
        return -k if inverse else k

    def format_word(self, word) -> str:
        if not word:
            return "1"
        return " ".join(
            self.generators[x - 1] if x > 0 else self.generators[-x - 1] + "^-1"
            for x in word)

    def rewrite(self, word_in_labels) -> tuple:
        """Rewrite ``(label, sign)`` pairs through ``images``."""
        out = []
        for label, sign in word_in_labels:
            image = self.images[label] if self.images else (self.letter(label),)
            out.extend(image if sign > 0 else invert(image))
        return free_reduce(out)

    def to_dict(self) -> dict:
        out = {
            "generators": list(self.generators),
            "relators": [self.format_word(r) for r in self.relators],
        }
        if self.exhausted:
            out["exhausted"] = True
        if self.component is not None:
            out["component"] = self.component
        return out

    def __repr__(self):
        relators = ", ".join(self.format_word(r) for r in self.relators)
        return f"<{', '.join(self.generators)} | {relators}>"


class PresentationHomomorphism(object):
    """Homomorphism given by generator images.

    Attributes
    ----------
    source, target : GroupPresentation
        presented groups
    images : tuple of tuple
        image word in ``target`` of every generator of ``source``
    """

    def __init__(self, source: GroupPresentation, target: GroupPresentation, images):
        assert len(images) == source.n_generators
        self.source = source
        self.target = target
        self.images = tuple(free_reduce(w) for w in images)

    def apply(self, word) -> tuple:
        out = []
        for x in word:
            image = self.images[abs(x) - 1]
            out.extend(image if x > 0 else invert(image))
        return free_reduce(out)

    def to_dict(self) -> dict:
        return {
            g: self.target.format_word(w)
            for g, w in zip(self.source.generators, self.images)}
