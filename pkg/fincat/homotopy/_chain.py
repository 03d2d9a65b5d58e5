import logging
from typing import NamedTuple

import numpy as np
import scipy.sparse as sp

from fincat.category import FiniteCategory
from fincat.errors import InvalidComplex
from fincat.group import AbelianInvariants, smith_invariants
from fincat.homotopy._nerve import nerve_truncated, TruncatedNerve


logger = logging.getLogger(__name__)


class HomologyResult(NamedTuple):
    """Integral homology in degrees ``0..d``.

    Attributes
    ----------
    betti : tuple of int
        free rank in each degree
    torsion : tuple of tuple
        invariant factors greater than one in each degree
    d : int
        validity bound
    """

    betti: tuple
    torsion: tuple
    d: int

    def group(self, n: int) -> AbelianInvariants:
        return AbelianInvariants(self.betti[n], self.torsion[n])

    def groups(self) -> list:
        return [self.group(n) for n in range(self.d + 1)]

    def reduced_vanishes(self) -> bool:
        """True when H0 = Z and every higher group is zero up to d."""
        return (
            self.betti[0] == 1
            and not any(self.torsion)
            and not any(self.betti[1:]))

    def __str__(self):
        return ", ".join(f"H{n} = {g}" for n, g in enumerate(self.groups()))

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "degrees": [
                {"n": n, "rank": g.rank, "torsion": list(g.torsion), "group": str(g)}
                for n, g in enumerate(self.groups())],
        }


class ChainComplex(object):
    """Bounded chain complex of free abelian groups.

    Attributes
    ----------
    dims : tuple of int
        rank of the chain group in each degree
    boundaries : list of scipy.sparse.csr_matrix
        ``boundaries[n - 1]`` is the boundary map from degree n to n - 1,
        shape ``(dims[n - 1], dims[n])``
    """

    def __init__(self, dims, boundaries, validate: bool = True):
        self.dims = tuple(int(k) for k in dims)
        assert len(boundaries) == len(self.dims) - 1, (len(boundaries), self.dims)
        self.boundaries = []
        for n, matrix in enumerate(boundaries, start=1):
            matrix = sp.csr_matrix(matrix, dtype=np.int64)
            if matrix.shape != (self.dims[n - 1], self.dims[n]):
                raise InvalidComplex(
                    f"boundary in degree {n} has shape {matrix.shape}",
                    {"degree": n, "expected": [self.dims[n - 1], self.dims[n]]})
            self.boundaries.append(matrix)
        if validate:
            self.validate()

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def boundary(self, n: int) -> sp.csr_matrix:
        """Boundary out of degree n; zero outside the stored range."""
        if 1 <= n <= self.top:
            return self.boundaries[n - 1]
        rows = self.dims[n - 1] if 1 <= n <= self.top + 1 else 0
        cols = self.dims[n] if 0 <= n <= self.top else 0
        return sp.csr_matrix((rows, cols), dtype=np.int64)

    def validate(self):
        for n in range(2, self.top + 1):
            product = (self.boundaries[n - 2] @ self.boundaries[n - 1]).tocoo()
            nonzero = np.flatnonzero(product.data)
            if len(nonzero):
                k = nonzero[0]
                raise InvalidComplex(
                    f"boundary composite in degree {n} is not zero",
                    {"degree": n, "row": int(product.row[k]),
                     "column": int(product.col[k]), "value": int(product.data[k])})

    def homology(self, d: int) -> HomologyResult:
        """Homology in degrees ``0..d``.

        Degrees above ``top`` have zero chains, so ``d`` may exceed
        ``top``; a nerve truncation must store degree ``d + 1``.
        """
        assert d >= 0, d
        factors = [smith_invariants(self.boundary(n)) for n in range(1, d + 2)]
        ranks = [0] + [len(f) for f in factors]
        betti, torsion = [], []
        for n in range(d + 1):
            dim = self.dims[n] if n <= self.top else 0
            betti.append(dim - ranks[n] - ranks[n + 1])
            torsion.append(tuple(t for t in factors[n] if t > 1))
        logger.debug("homology up to degree %d over chain ranks %s", d, self.dims)
        return HomologyResult(tuple(betti), tuple(torsion), d)


def homology_from_boundaries(boundaries, d: int = None, dims=None) -> HomologyResult:
    """Homology of an integer chain complex given by its boundary matrices.

    Parameters
    ----------
    boundaries : list of array_like
        ``boundaries[n - 1]`` maps degree n to degree n - 1
    d : int, optional
        top degree to report, by default the top stored degree
    dims : list of int, optional
        chain ranks; inferred from the matrix shapes when omitted

    Returns
    -------
    HomologyResult
    """
    if dims is None:
        assert boundaries, "dims are required without boundaries"
        dims = [np.shape(boundaries[0])[0]] + [np.shape(b)[1] for b in boundaries]
    complex_ = ChainComplex(dims, boundaries)
    return complex_.homology(complex_.top if d is None else d)


def nerve_chain_complex(N: TruncatedNerve) -> ChainComplex:
    """Normalized chains of a truncated nerve; degenerate faces vanish."""
    dims = N.counts()
    boundaries = []
    for n in range(1, N.dim + 1):
        faces = N.faces[n]
        signs = np.where(np.arange(n + 1) % 2 == 0, 1, -1)
        rows = faces.ravel()
        cols = np.repeat(np.arange(len(faces)), n + 1)
        data = np.tile(signs, len(faces))
        keep = rows >= 0
        boundaries.append(sp.coo_matrix(
            (data[keep], (rows[keep], cols[keep])),
            shape=(dims[n - 1], dims[n]), dtype=np.int64).tocsr())
    return ChainComplex(dims, boundaries)


def nerve_homology(C: FiniteCategory, d: int, max_simplices: int = None) -> HomologyResult:
    """Integral homology of the nerve of C in degrees ``0..d``.

    Parameters
    ----------
    C : FiniteCategory
        validated category
    d : int
        top degree; the nerve is enumerated up to degree ``d + 1``
    max_simplices : int, optional
        simplex budget, by default ``config.max_simplices``

    Returns
    -------
    HomologyResult
    """
    N = nerve_truncated(C, d + 1, max_simplices=max_simplices)
    return nerve_chain_complex(N).homology(d)
