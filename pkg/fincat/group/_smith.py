"""Exact Smith normal form invariants of integer matrices.

Entries are Python ints throughout, so intermediate growth never
overflows. Unit pivots are eliminated sparsely first; the remaining
block is reduced densely on an object array.
"""

import logging
from math import gcd

import numpy as np
import scipy.sparse as sp


logger = logging.getLogger(__name__)


def _sparse_rows(matrix) -> list:
    if sp.issparse(matrix):
        coo = sp.coo_matrix(matrix)
        rows = [dict() for _ in range(coo.shape[0])]
        for i, j, v in zip(coo.row, coo.col, coo.data):
            v = int(v)
            if v:
                rows[i][int(j)] = rows[i].get(int(j), 0) + v
        return [{j: v for j, v in r.items() if v} for r in rows]
    dense = np.asarray(matrix, dtype=object)
    if dense.size == 0:
        return []
    if dense.ndim != 2:
        dense = dense.reshape(len(dense), -1)
    return [
        {j: int(v) for j, v in enumerate(row) if v != 0} for row in dense]


def _eliminate_unit_pivots(rows: list) -> tuple:
    """Remove unit pivots by sparse row operations.

    Returns the number of removed pivots and the surviving rows.
    """
    columns = {}
    for i, row in enumerate(rows):
        for j in row:
            columns.setdefault(j, set()).add(i)
    alive = set(i for i, row in enumerate(rows) if row)
    units = 0
    while True:
        found = False
        # sparse rows first keep fill-in low
        for r in sorted(alive, key=lambda i: (len(rows[i]), i)):
            if r not in alive:
                continue
            unit = next(
                ((j, v) for j, v in rows[r].items() if v in (1, -1)), None)
            if unit is None:
                continue
            c, v = unit
            pivot_row = rows[r]
            for i in sorted(columns[c] - {r}):
                factor = rows[i][c] * v
                target = rows[i]
                for j, w in pivot_row.items():
                    new = target.get(j, 0) - factor * w
                    if new:
                        if j not in target:
                            columns.setdefault(j, set()).add(i)
                        target[j] = new
                    else:
                        target.pop(j, None)
                        columns[j].discard(i)
                if not target:
                    alive.discard(i)
            for j in pivot_row:
                columns[j].discard(r)
            rows[r] = {}
            alive.discard(r)
            units += 1
            found = True
        if not found:
            break
    return units, [rows[i] for i in sorted(alive)]


def _dense_diagonal(block: np.ndarray) -> list:
    """Diagonalize an object-dtype integer matrix in place."""
    a = block
    diagonal = []
    while a.size:
        nonzero = np.argwhere(a != 0)
        if not len(nonzero):
            break
        values = np.abs(a[nonzero[:, 0], nonzero[:, 1]])
        i, j = nonzero[int(np.argmin(values))]
        a[[0, i]] = a[[i, 0]]
        a[:, [0, j]] = a[:, [j, 0]]
        while True:
            p = a[0, 0]
            for k in range(1, a.shape[0]):
                if a[k, 0]:
                    a[k] -= (a[k, 0] // p) * a[0]
            for k in range(1, a.shape[1]):
                if a[0, k]:
                    a[:, k] -= (a[0, k] // p) * a[:, 0]
            # remainders are strictly smaller than the pivot
            column = [(abs(a[k, 0]), 0, k) for k in range(1, a.shape[0]) if a[k, 0]]
            row = [(abs(a[0, k]), 1, k) for k in range(1, a.shape[1]) if a[0, k]]
            if column or row:
                _, axis, k = min(column + row)
                if axis == 0:
                    a[[0, k]] = a[[k, 0]]
                else:
                    a[:, [0, k]] = a[:, [k, 0]]
                continue
            bad = np.argwhere(a[1:, 1:] % p != 0)
            if not len(bad):
                break
            # fold an offending row in so the pivot shrinks
            a[0] += a[int(bad[0, 0]) + 1]
        diagonal.append(abs(int(a[0, 0])))
        a = a[1:, 1:]
    return diagonal


def _divisibility_order(diagonal: list) -> list:
    d = sorted(diagonal)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    return d


def smith_invariants(matrix) -> list:
    """Nonzero invariant factors of an integer matrix.

    Parameters
    ----------
    matrix : array_like or scipy.sparse matrix
        integer matrix

    Returns
    -------
    list of int
        positive invariant factors d_1 | d_2 | ... ; their count is the rank
    """
    rows = _sparse_rows(matrix)
    units, rest = _eliminate_unit_pivots(rows)
    diagonal = [1] * units
    if rest:
        columns = sorted({j for row in rest for j in row})
        position = {j: k for k, j in enumerate(columns)}
        block = np.zeros((len(rest), len(columns)), dtype=object)
        block[:] = 0
        for i, row in enumerate(rest):
            for j, v in row.items():
                block[i, position[j]] = v
        logger.debug(
            "dense Smith block %dx%d after %d unit pivots",
            block.shape[0], block.shape[1], units)
        diagonal.extend(_dense_diagonal(block))
    return _divisibility_order(diagonal)


def rank_and_torsion(matrix) -> tuple:
    """Rank and the invariant factors greater than one."""
    invariants = smith_invariants(matrix)
    return len(invariants), [d for d in invariants if d > 1]
