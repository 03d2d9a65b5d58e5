import unittest

from fincat.group import (
    abelianization,
    coset_enumeration,
    GroupPresentation,
    tietze_simplify,
)


class TestTietze(unittest.TestCase):

    def test_eliminates_generator(self):
        P = GroupPresentation(["a", "b"], [(2, -1)])
        Q = tietze_simplify(P)
        self.assertEqual(Q.generators, ("a",))
        self.assertEqual(Q.relators, ())
        self.assertEqual(Q.images, {"a": (1,), "b": (1,)})
        self.assertFalse(Q.exhausted)

    def test_budget(self):
        P = GroupPresentation(["a", "b"], [(2, -1)])
        Q = tietze_simplify(P, max_steps=0)
        self.assertEqual(Q.n_generators, 2)
        self.assertTrue(Q.exhausted)

    def test_preserves_group(self):
        P = GroupPresentation(
            ["a", "b", "c"], [(1, 1), (2, 2, 2), (1, 2, 1, 2), (3, -1, -2)])
        Q = tietze_simplify(P)
        self.assertLessEqual(Q.n_generators, P.n_generators)
        self.assertLessEqual(Q.total_length, P.total_length)
        self.assertEqual(abelianization(Q), abelianization(P))
        self.assertEqual(coset_enumeration(Q).order, 6)
        self.assertEqual(set(Q.images), {"a", "b", "c"})

    def test_rewrite(self):
        P = GroupPresentation(["a", "b"], [(2, -1), (1, 1, 1)])
        Q = tietze_simplify(P)
        G = coset_enumeration(Q)
        self.assertEqual(G.order, 3)
        b = G.evaluate(Q.rewrite([("b", 1)]))
        a = G.evaluate(Q.rewrite([("a", 1)]))
        self.assertEqual(a, b)


if __name__ == '__main__':
    unittest.main()
