from collections import Counter, deque

import numpy as np

from fincat.config import config, StepBudget
from fincat.errors import ResourceLimit
from fincat.group._table import FiniteGroupTable


def _extend(G: FiniteGroupTable, H: FiniteGroupTable, generators, images):
    """Extend generator images to a map G -> H, or None if inconsistent."""
    phi = np.full(G.order, -1, dtype=np.int64)
    phi[G.identity] = H.identity
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        for g, h in zip(generators, images):
            y, image = G.table[x, g], H.table[phi[x], h]
            if phi[y] < 0:
                phi[y] = image
                queue.append(y)
            elif phi[y] != image:
                return None
    return phi


def find_isomorphism(
    G: FiniteGroupTable,
    H: FiniteGroupTable,
    max_order: int = None,
    max_steps: int = None,
):
    """Search for a group isomorphism G -> H.

    Parameters
    ----------
    G, H : FiniteGroupTable
        groups to compare
    max_order : int, optional
        refuse groups larger than this, by default ``config.max_group_order``
    max_steps : int, optional
        search budget, by default ``config.max_steps``

    Returns
    -------
    np.ndarray or None
        image index of every element of G, None when the groups are not
        isomorphic

    Raises
    ------
    ResourceLimit
        the groups exceed ``max_order`` or the search ran out of steps
    """
    max_order = config.max_group_order if max_order is None else max_order
    if G.order != H.order:
        return None
    if G.order > max_order:
        raise ResourceLimit("max_group_order", max_order)
    orders_g, orders_h = G.element_orders(), H.element_orders()
    if Counter(orders_g.tolist()) != Counter(orders_h.tolist()):
        return None
    generators = G.generators()
    candidates = [np.flatnonzero(orders_h == orders_g[g]) for g in generators]
    budget = StepBudget(max_steps)

    def search(images):
        k = len(images)
        if k == len(generators):
            budget.tick(G.order)
            phi = _extend(G, H, generators, images)
            if phi is not None and len(np.unique(phi)) == G.order:
                return phi
            return None
        for h in candidates[k]:
            budget.tick()
            found = search(images + [int(h)])
            if found is not None:
                return found
        return None

    return search([])
