import unittest

import numpy as np

from fincat.errors import ValidationError
from fincat.group import (
    abelianization,
    canonical_relator,
    cyclic_reduce,
    free_reduce,
    GroupPresentation,
    invert,
    PresentationHomomorphism,
)


class TestWords(unittest.TestCase):

    def test_free_reduce(self):
        self.assertEqual(free_reduce((1, -1, 2)), (2,))
        self.assertEqual(free_reduce((1, 2, -2, -1)), ())
        self.assertEqual(free_reduce((1, 2, 1)), (1, 2, 1))

    def test_cyclic_reduce(self):
        self.assertEqual(cyclic_reduce((-1, 2, 1)), (2,))
        self.assertEqual(cyclic_reduce((1, 2, -1, -2)), (1, 2, -1, -2))

    def test_invert(self):
        self.assertEqual(invert((1, -2, 3)), (-3, 2, -1))

    def test_canonical_relator(self):
        expected = canonical_relator((1, 2))
        self.assertEqual(canonical_relator((2, 1)), expected)
        self.assertEqual(canonical_relator((-2, -1)), expected)
        self.assertEqual(canonical_relator((3, 1, 2, -3)), expected)
        self.assertEqual(canonical_relator((1, -1)), ())


class TestGroupPresentation(unittest.TestCase):

    def test_from_labels(self):
        P = GroupPresentation.from_labels(["a", "b"], [["a", "b", "a^-1", "b^-1"]])
        self.assertEqual(P.relators, ((1, 2, -1, -2),))
        self.assertEqual(P.format_word(P.relators[0]), "a b a^-1 b^-1")
        self.assertEqual(P.total_length, 4)

    def test_unknown_generator(self):
        with self.assertRaises(ValidationError):
            GroupPresentation.from_labels(["a"], [["a", "c"]])
        with self.assertRaises(ValidationError):
            GroupPresentation(["a"], [(1, 2)])

    def test_relator_matrix(self):
        P = GroupPresentation(["a", "b"], [(1, 2, -1, -2), (1, 1, 2)])
        self.assertTrue(np.array_equal(P.relator_matrix().toarray(), [[0, 0], [2, 1]]))

    def test_abelianization(self):
        commutator = GroupPresentation(["a", "b"], [(1, 2, -1, -2)])
        self.assertEqual(abelianization(commutator), (2, ()))
        cyclic = GroupPresentation(["a"], [(1,) * 6])
        self.assertEqual(abelianization(cyclic), (0, (6,)))
        self.assertEqual(str(abelianization(cyclic)), "Z/6")
        mixed = GroupPresentation(["a", "b"], [(1, 1), (2, 2, 2)])
        self.assertEqual(abelianization(mixed), (0, (6,)))
        free = GroupPresentation(["a", "b"])
        self.assertEqual(abelianization(free), (2, ()))
        self.assertEqual(str(abelianization(free)), "Z^2")

    def test_homomorphism(self):
        P = GroupPresentation(["a", "b"], [(1, 2, -1, -2)])
        Q = GroupPresentation(["x"])
        h = PresentationHomomorphism(P, Q, [(1,), (1, 1)])
        self.assertEqual(h.apply((1, 2, -1)), (1, 1))
        self.assertEqual(h.to_dict(), {"a": "x", "b": "x x"})


if __name__ == '__main__':
    unittest.main()
