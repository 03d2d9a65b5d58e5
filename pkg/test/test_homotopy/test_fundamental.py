import unittest

from fincat.category import (
    contractibility_certificate,
    Functor,
    opposite_category,
    product_category,
)
from fincat.corpus import (
    bundled_categories,
    circle_poset,
    cyclic_classifying,
    discrete,
    symmetric_classifying,
    walking_span,
)
from fincat.errors import DisconnectedBasepoint
from fincat.homotopy import (
    change_basepoint,
    fundamental_group,
    induced_pi1_hom,
    nerve_homology,
    pi1_presentation,
)


class TestPresentation(unittest.TestCase):

    def test_cyclic(self):
        P = pi1_presentation(cyclic_classifying(2), "o")
        self.assertEqual(P.generators, ("g",))
        self.assertEqual(P.relators, ((1, 1),))

    def test_tree_edges(self):
        P = pi1_presentation(circle_poset().category(), "a")
        self.assertEqual(P.n_generators, 4)
        self.assertEqual(sum(len(r) == 1 for r in P.relators), 3)

    def test_component(self):
        P = pi1_presentation(discrete(3), "x1")
        self.assertEqual(P.n_generators, 0)
        with self.assertRaises(DisconnectedBasepoint):
            pi1_presentation(discrete(3), "x9")


class TestFundamentalGroup(unittest.TestCase):

    def test_finite(self):
        self.assertEqual(fundamental_group(cyclic_classifying(2), "o").order, 2)
        pi1 = fundamental_group(symmetric_classifying(3), "o")
        self.assertEqual(pi1.order, 6)
        self.assertFalse(pi1.group.is_abelian())
        self.assertEqual(str(pi1.abelian), "Z/2")

    def test_contractible(self):
        pi1 = fundamental_group(walking_span(), "A")
        self.assertTrue(pi1.is_trivial)
        self.assertEqual(str(pi1.abelian), "0")

    def test_infinite(self):
        pi1 = fundamental_group(circle_poset().category(), "a", max_cosets=50)
        self.assertIsNone(pi1.group)
        self.assertIsNone(pi1.order)
        self.assertEqual(pi1.limit.budget, "max_cosets")
        self.assertEqual(str(pi1.abelian), "Z")
        self.assertEqual(pi1.to_dict()["exhausted"], {"budget": "max_cosets", "limit": 50})

    def test_element(self):
        pi1 = fundamental_group(cyclic_classifying(2), "o")
        self.assertEqual(pi1.element([("g", 1), ("g", 1)]), pi1.group.identity)
        self.assertNotEqual(pi1.element([("g", 1)]), pi1.group.identity)

    def test_abelianization_matches_first_homology(self):
        for C in (symmetric_classifying(3), cyclic_classifying(4), circle_poset().category()):
            pi1 = fundamental_group(C, C.objects[0], max_cosets=200)
            self.assertEqual(pi1.abelian, nerve_homology(C, 1).group(1))


class TestCorpusInvariants(unittest.TestCase):

    def test_abelianization_on_every_component(self):
        for name, build in sorted(bundled_categories().items()):
            C = build()
            for component in C.components():
                pi1 = fundamental_group(C, component[0], max_cosets=200)
                H = nerve_homology(C.full_subcategory(component), 1)
                self.assertEqual(pi1.abelian, H.group(1), (name, component[0]))

    def test_contractible_categories(self):
        for name, build in sorted(bundled_categories().items()):
            C = build()
            if not contractibility_certificate(C).is_holds:
                continue
            self.assertEqual(fundamental_group(C, C.objects[0]).order, 1, name)
            self.assertTrue(nerve_homology(C, 2).reduced_vanishes(), name)

    def test_opposite_homology(self):
        for name, build in sorted(bundled_categories().items()):
            C = build()
            self.assertEqual(
                nerve_homology(opposite_category(C), 2), nerve_homology(C, 2), name)

    def test_product_order(self):
        B2, B3 = cyclic_classifying(2), cyclic_classifying(3)
        self.assertEqual(fundamental_group(product_category(B2, B3), "(o,o)").order, 6)
        self.assertEqual(fundamental_group(product_category(B2, walking_span()), "(o,A)").order, 2)
        self.assertEqual(fundamental_group(product_category(B2, B2), "(o,o)").order, 4)


class TestInducedHomomorphism(unittest.TestCase):

    def test_squaring(self):
        B2, B4 = cyclic_classifying(2), cyclic_classifying(4)
        F = Functor(B2, B4, {"o": "o"}, {"g": "g^2"})
        hom = induced_pi1_hom(F, "o")
        self.assertEqual(hom.images, ((2,),))
        self.assertEqual(hom.to_dict(), {"g": "g^2"})

    def test_change_basepoint(self):
        C = circle_poset().category()
        hom = change_basepoint(C, "a", "b")
        self.assertEqual(hom.source.n_generators, hom.target.n_generators)
        with self.assertRaises(DisconnectedBasepoint):
            change_basepoint(discrete(2), "x0", "x1")


if __name__ == '__main__':
    unittest.main()
