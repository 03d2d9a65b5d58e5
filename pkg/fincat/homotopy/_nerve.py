import logging

import numpy as np

from fincat.category import FiniteCategory
from fincat.config import config
from fincat.errors import ResourceLimit


logger = logging.getLogger(__name__)

DEGENERATE = -1


class TruncatedNerve(object):
    """Nondegenerate simplices of the nerve of a finite category.

    An n-simplex (n >= 1) is a chain ``(f1, ..., fn)`` of composable
    non-identity morphisms, ``f1`` applied first. Face ``d0`` drops ``f1``,
    ``dn`` drops ``fn`` and the inner face ``di`` replaces ``fi, fi+1`` by
    their composite; a face whose composite is an identity is degenerate.

    Attributes
    ----------
    category : FiniteCategory
        the category
    dim : int
        dimension bound
    simplices : list of np.ndarray
        ``simplices[0]`` lists object indices, ``simplices[n]`` is a
        (count, n) array of morphism indices in lexicographic order
    faces : list of np.ndarray
        ``faces[n][k, i]`` is the index of ``di`` of the k-th n-simplex
        among the (n-1)-simplices, or -1 when degenerate
    """

    def __init__(self, category: FiniteCategory, dim: int, max_simplices: int = None):
        assert dim >= 0, dim
        limit = config.max_simplices if max_simplices is None else max_simplices
        self.category = category
        self.dim = dim
        C = category
        self.simplices = [np.arange(C.n_objects, dtype=np.int64)]
        self.faces = [np.zeros((C.n_objects, 0), dtype=np.int64)]
        total = C.n_objects
        nonidentity = C.nonidentity_indices()
        outgoing = [nonidentity[C.src[nonidentity] == x] for x in range(C.n_objects)]
        chains = nonidentity.reshape(-1, 1)
        for n in range(1, dim + 1):
            if n > 1:
                last = chains[:, -1]
                counts = np.array(
                    [len(outgoing[t]) for t in C.tgt[last]], dtype=np.int64)
                if total + int(counts.sum()) > limit:
                    raise ResourceLimit(
                        "max_simplices", limit,
                        f"nerve of {C.name} exceeds {limit} simplices in degree {n}")
                extension = (
                    np.concatenate([outgoing[t] for t in C.tgt[last]])
                    if len(last) else np.zeros(0, dtype=np.int64))
                chains = np.column_stack(
                    [np.repeat(chains, counts, axis=0), extension]).astype(np.int64)
            elif total + len(chains) > limit:
                raise ResourceLimit("max_simplices", limit)
            total += len(chains)
            self.simplices.append(chains.reshape(-1, n))
            self.faces.append(self._face_table(n))
        logger.debug(
            "nerve of %s up to degree %d: %s simplices",
            C.name, dim, [len(s) for s in self.simplices])

    def _face_table(self, n: int) -> np.ndarray:
        C = self.category
        chains = self.simplices[n]
        faces = np.full((len(chains), n + 1), DEGENERATE, dtype=np.int64)
        if n == 1:
            faces[:, 0] = C.tgt[chains[:, 0]]
            faces[:, 1] = C.src[chains[:, 0]]
            return faces
        index = {tuple(row): k for k, row in enumerate(self.simplices[n - 1].tolist())}
        identity = C.identity_mask()
        for k, chain in enumerate(chains.tolist()):
            faces[k, 0] = index[tuple(chain[1:])]
            faces[k, n] = index[tuple(chain[:-1])]
            for i in range(1, n):
                composite = C.table[chain[i], chain[i - 1]]
                if not identity[composite]:
                    faces[k, i] = index[
                        tuple(chain[:i - 1]) + (composite,) + tuple(chain[i + 1:])]
        return faces

    def count(self, n: int) -> int:
        return len(self.simplices[n])

    def counts(self) -> list:
        return [len(s) for s in self.simplices]

    def label(self, n: int, k: int) -> str:
        C = self.category
        if n == 0:
            return C.objects[self.simplices[0][k]]
        return "(" + ", ".join(C.morphisms[m] for m in self.simplices[n][k]) + ")"

    def simplicial_identity_violation(self):
        """First ``(n, k, i, j)`` with ``di dj != dj-1 di`` on stored data.

        Only pairs where both composites avoid degenerate faces are
        comparable.
        """
        for n in range(2, self.dim + 1):
            upper, lower = self.faces[n], self.faces[n - 1]
            for k in range(len(upper)):
                for j in range(1, n + 1):
                    for i in range(j):
                        a, b = upper[k, j], upper[k, i]
                        if a < 0 or b < 0:
                            continue
                        left, right = lower[a, i], lower[b, j - 1]
                        if left >= 0 and right >= 0 and left != right:
                            return n, k, i, j
        return None

    def to_dict(self) -> dict:
        return {
            "category": self.category.name,
            "dim": self.dim,
            "counts": self.counts(),
        }


def nerve_truncated(C: FiniteCategory, d: int, max_simplices: int = None) -> TruncatedNerve:
    """All nondegenerate simplices of the nerve of C up to degree d."""
    return TruncatedNerve(C, d, max_simplices=max_simplices)
