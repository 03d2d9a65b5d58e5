import unittest

import numpy as np

from fincat.corpus import cyclic_group, symmetric_group
from fincat.errors import InvalidGroup, NotNormal
from fincat.group import coset_enumeration, find_isomorphism, FiniteGroupTable


def klein_four():
    return FiniteGroupTable.from_operation(
        [(0, 0), (0, 1), (1, 0), (1, 1)],
        lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2))


class TestFiniteGroupTable(unittest.TestCase):

    def test_symmetric(self):
        S3 = symmetric_group(3)
        self.assertEqual(S3.order, 6)
        self.assertEqual(S3.elements[S3.identity], "012")
        self.assertFalse(S3.is_abelian())
        self.assertEqual(sorted(S3.element_orders().tolist()), [1, 2, 2, 2, 3, 3])
        self.assertEqual(S3.abelian_invariants(), [2])

    def test_invalid(self):
        with self.assertRaises(InvalidGroup):
            FiniteGroupTable(["e", "a"], [[0, 1], [1, 1]])
        with self.assertRaises(InvalidGroup):
            FiniteGroupTable(["e"], [[0, 0]])

    def test_quotient(self):
        S3 = symmetric_group(3)
        A3 = S3.generate([S3.elements.index("120")])
        self.assertEqual(len(A3), 3)
        Q, coset_of = S3.quotient(A3)
        self.assertEqual(Q.order, 2)
        self.assertEqual(coset_of[S3.identity], Q.identity)
        with self.assertRaises(NotNormal):
            S3.quotient(S3.generate([S3.elements.index("021")]))

    def test_normal_closure(self):
        S3 = symmetric_group(3)
        closure = S3.normal_closure([S3.elements.index("021")])
        self.assertEqual(len(closure), 6)

    def test_abelian_invariants(self):
        self.assertEqual(klein_four().abelian_invariants(), [2, 2])
        self.assertEqual(cyclic_group(4).abelian_invariants(), [4])
        self.assertEqual(cyclic_group(1).abelian_invariants(), [])

    def test_presentation(self):
        S3 = symmetric_group(3)
        G = coset_enumeration(S3.presentation())
        self.assertEqual(G.order, 6)
        self.assertIsNotNone(find_isomorphism(S3, G))

    def test_find_isomorphism(self):
        self.assertIsNone(find_isomorphism(cyclic_group(6), symmetric_group(3)))
        self.assertIsNone(find_isomorphism(klein_four(), cyclic_group(4)))
        G, H = cyclic_group(6), cyclic_group(6)
        phi = find_isomorphism(G, H)
        self.assertEqual(len(np.unique(phi)), 6)
        for a in range(6):
            for b in range(6):
                self.assertEqual(phi[G.table[a, b]], H.table[phi[a], phi[b]])


if __name__ == '__main__':
    unittest.main()
