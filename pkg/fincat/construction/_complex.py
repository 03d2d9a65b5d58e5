from itertools import combinations
import logging

import numpy as np
import scipy.sparse as sp

from fincat.category import FiniteCategory
from fincat.config import config
from fincat.construction._poset import Poset
from fincat.errors import InvalidComplex, ResourceLimit
from fincat.homotopy import ChainComplex, HomologyResult


logger = logging.getLogger(__name__)


def face_label(face) -> str:
    return "{" + ",".join(face) + "}"


class SimplicialComplex(object):
    """Finite abstract simplicial complex given by its facets.

    Attributes
    ----------
    vertices : tuple of str
        vertex ids, sorted; faces list their vertices in this order
    facets : tuple of tuple
        maximal faces as sorted vertex tuples
    """

    def __init__(self, facets, vertices=None):
        facets = [tuple(sorted(set(str(v) for v in facet))) for facet in facets]
        for facet in facets:
            if not facet:
                raise InvalidComplex("empty facet")
        unique = sorted(set(facets), key=lambda f: (len(f), f))
        for k, small in enumerate(unique):
            for large in unique[k + 1:]:
                if set(small) <= set(large):
                    raise InvalidComplex(
                        "facet contained in another facet",
                        {"facet": list(small), "in": list(large)})
        extra = [] if vertices is None else [str(v) for v in vertices]
        self.vertices = tuple(sorted(set(extra) | {v for f in unique for v in f}))
        covered = {v for f in unique for v in f}
        # isolated vertices are facets of their own
        unique.extend((v,) for v in self.vertices if v not in covered)
        self.facets = tuple(sorted(unique, key=lambda f: (len(f), f)))

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def faces(self, k: int, max_simplices: int = None) -> list:
        """Sorted k-dimensional faces."""
        limit = config.max_simplices if max_simplices is None else max_simplices
        found = set()
        for facet in self.facets:
            found.update(combinations(facet, k + 1))
            if len(found) > limit:
                raise ResourceLimit("max_simplices", limit)
        return sorted(found)

    def all_faces(self, max_simplices: int = None) -> list:
        out = []
        for k in range(self.dim + 1):
            out.extend(self.faces(k, max_simplices=max_simplices))
        return out

    def chain_complex(self, top: int, max_simplices: int = None) -> ChainComplex:
        """Oriented chains in degrees ``0..top``."""
        faces = [self.faces(k, max_simplices=max_simplices) for k in range(top + 1)]
        boundaries = []
        for k in range(1, top + 1):
            index = {face: i for i, face in enumerate(faces[k - 1])}
            rows, cols, data = [], [], []
            for j, face in enumerate(faces[k]):
                for i in range(k + 1):
                    rows.append(index[face[:i] + face[i + 1:]])
                    cols.append(j)
                    data.append(1 if i % 2 == 0 else -1)
            boundaries.append(sp.csr_matrix(
                (np.array(data, dtype=np.int64),
                 (np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64))),
                shape=(len(faces[k - 1]), len(faces[k]))))
        return ChainComplex([len(f) for f in faces], boundaries)

    def to_dict(self) -> dict:
        return {"facets": [list(f) for f in self.facets]}

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.vertices == other.vertices
            and self.facets == other.facets)

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self):
        return f"SimplicialComplex(dim={self.dim}, facets={len(self.facets)})"


def simplicial_homology(K: SimplicialComplex, d: int, max_simplices: int = None) -> HomologyResult:
    """Homology of the oriented chain complex of K in degrees ``0..d``."""
    return K.chain_complex(d + 1, max_simplices=max_simplices).homology(d)


def face_poset(K: SimplicialComplex, name: str = None) -> tuple:
    """Nonempty faces of K ordered by inclusion.

    Returns
    -------
    poset : Poset
        elements ``{v0,v1,...}``, smaller faces first
    category : FiniteCategory
        its category
    """
    faces = K.all_faces()
    if len(faces) > config.max_objects:
        raise ResourceLimit("max_objects", config.max_objects)
    position = {v: i for i, v in enumerate(K.vertices)}
    members = np.zeros((len(faces), len(K.vertices)), dtype=bool)
    for i, face in enumerate(faces):
        members[i, [position[v] for v in face]] = True
    leq = ~(members[:, None, :] & ~members[None, :, :]).any(axis=2)
    poset = Poset([face_label(f) for f in faces], leq)
    logger.debug("face poset with %d elements", len(faces))
    return poset, poset.category(name=name)


def order_complex(P: Poset) -> SimplicialComplex:
    """Complex of chains of P; its facets are the maximal chains."""
    return SimplicialComplex(P.maximal_chains(), vertices=P.elements)


def barycentric_subdivide(K: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the face poset of K."""
    poset, _ = face_poset(K)
    return order_complex(poset)


def boundary_complex(n: int) -> SimplicialComplex:
    """Boundary of the n-simplex on vertices ``0..n``."""
    assert n >= 1, n
    vertices = [str(v) for v in range(n + 1)]
    return SimplicialComplex(
        [tuple(v for v in vertices if v != skip) for skip in vertices])


def simplex(n: int) -> SimplicialComplex:
    """The full n-simplex on vertices ``0..n``."""
    return SimplicialComplex([[str(v) for v in range(n + 1)]])


def complex_category(K: SimplicialComplex, name: str = None) -> FiniteCategory:
    return face_poset(K, name=name)[1]
