import unittest

import numpy as np

from fincat.construction import boolean_lattice, closure_adjunction, Poset
from fincat.corpus import circle_poset
from fincat.errors import InvalidPoset
from fincat.homotopy import homotopy_equivalence_certify


class TestPoset(unittest.TestCase):

    def test_closure_of_relation(self):
        P = Poset.from_relation(["a", "b", "c"], [("a", "b"), ("b", "c")])
        self.assertTrue(P.is_leq("a", "c"))
        self.assertEqual(P.covers(), [("a", "b"), ("b", "c")])
        self.assertEqual(P.maximal_chains(), [("a", "b", "c")])

    def test_invalid(self):
        with self.assertRaises(InvalidPoset):
            Poset.from_relation(["a", "b"], [("a", "b"), ("b", "a")])
        with self.assertRaises(InvalidPoset):
            Poset.from_relation(["a"], [("a", "z")])
        with self.assertRaises(InvalidPoset):
            Poset(["a", "b"], np.array([[True, True], [False, False]]))
        with self.assertRaises(InvalidPoset):
            Poset.from_relation(["a", "b", "c"], [("a", "b"), ("b", "c")], closure=False)

    def test_category(self):
        C = circle_poset().category(name="CirclePoset")
        self.assertEqual(C.n_morphisms, 8)
        self.assertEqual(C.source("a<=x"), "a")
        self.assertEqual(len(circle_poset().maximal_chains()), 4)

    def test_boolean_lattice(self):
        P = boolean_lattice("ab")
        self.assertEqual(len(P), 4)
        self.assertTrue(P.is_leq("{}", "{a,b}"))
        self.assertFalse(P.is_leq("{a}", "{b}"))
        C = boolean_lattice("abc").category()
        self.assertEqual(C.n_morphisms, 27)

    def test_to_dict(self):
        P = circle_poset()
        Q = Poset.from_relation(P.to_dict()["elements"], P.to_dict()["leq"])
        self.assertTrue(np.array_equal(P.leq, Q.leq))


class TestClosureAdjunction(unittest.TestCase):

    def setUp(self):
        self.P = Poset.from_relation(["a", "b", "t"], [("a", "t"), ("b", "t")])

    def test_equivalence(self):
        F, G, unit, counit = closure_adjunction(
            self.P, {"a": "t", "b": "t", "t": "t"}, name="Wedge")
        self.assertEqual(F.cod.objects, ("t",))
        report = homotopy_equivalence_certify(F, G, [unit, counit])
        self.assertTrue(report.is_holds)

    def test_not_a_closure(self):
        with self.assertRaises(InvalidPoset):
            closure_adjunction(self.P, {"a": "b", "b": "b", "t": "t"})
        with self.assertRaises(InvalidPoset):
            closure_adjunction(self.P, {"a": "t", "b": "t"})


if __name__ == '__main__':
    unittest.main()
