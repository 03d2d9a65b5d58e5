import unittest

from fincat.category import (
    check_category_property,
    contractibility_certificate,
    FiniteCategory,
    monster_report,
    Verdict,
)
from fincat.construction import boolean_lattice
from fincat.corpus import (
    bundled_categories,
    circle_poset,
    cyclic_classifying,
    discrete,
    injections,
    poset_with_top,
    small_objects,
    symmetric_classifying,
    walking_arrow,
    walking_idempotent,
    walking_span,
)
from fincat.errors import SpanNotInCategory


class TestCategoryProperties(unittest.TestCase):

    def test_amalgamation(self):
        report = check_category_property(walking_span(), "AP")
        self.assertEqual(report.verdict, Verdict.FAILS)
        self.assertEqual(report.witness, {"span": ["A", "f", "g"]})
        top = poset_with_top().category()
        self.assertTrue(check_category_property(top, "AP").is_holds)

    def test_amalgamation_spans(self):
        report = check_category_property(walking_span(), "AP", spans=[("A", "f", "g")])
        self.assertTrue(report.is_fails)
        with self.assertRaises(SpanNotInCategory):
            check_category_property(walking_span(), "AP", spans=[("f", "1_B")])
        with self.assertRaises(ValueError):
            check_category_property(walking_span(), "Initial", spans=[("f", "g")])

    def test_initial_terminal(self):
        top = poset_with_top().category()
        self.assertTrue(check_category_property(top, "Initial").is_fails)
        report = check_category_property(top, "Terminal")
        self.assertTrue(report.is_holds)
        self.assertEqual(report.witness, {"object": "t"})
        self.assertTrue(check_category_property(walking_span(), "Initial").is_holds)

    def test_all_mono(self):
        report = check_category_property(walking_idempotent(), "AllMono")
        self.assertTrue(report.is_fails)
        self.assertEqual(report.witness, {"f": "e", "g": "1_o", "h": "e"})
        self.assertTrue(check_category_property(cyclic_classifying(2), "AllMono").is_holds)

    def test_filtered(self):
        circle = circle_poset().category()
        report = check_category_property(circle, "Filtered")
        self.assertEqual(report.witness, {"case": "pair", "objects": ["x", "y"]})
        self.assertEqual(
            check_category_property(circle, "JEP").witness, {"objects": ["x", "y"]})
        self.assertTrue(check_category_property(poset_with_top().category(), "Filtered").is_holds)
        # parallel pair 1, g in B Z/2 has no coequalizing map
        report = check_category_property(cyclic_classifying(2), "Filtered")
        self.assertEqual(report.witness["case"], "parallel")

    def test_lattices(self):
        for atoms in ("ab", "abc"):
            C = boolean_lattice(atoms).category()
            self.assertTrue(check_category_property(C, "Pushouts").is_holds)
            self.assertTrue(check_category_property(C, "Pullbacks").is_holds)
            self.assertTrue(check_category_property(C, "BinaryCoproducts").is_holds)

    def test_connected(self):
        report = check_category_property(discrete(3), "Connected")
        self.assertEqual(report.witness, {"components": [["x0"], ["x1"], ["x2"]]})
        self.assertTrue(check_category_property(walking_span(), "Connected").is_holds)

    def test_no_maximal_objects(self):
        report = check_category_property(cyclic_classifying(2), "NoMaximalObjects")
        self.assertEqual(report.witness, {"object": "o"})
        report = check_category_property(circle_poset().category(), "NoMaximalObjects")
        self.assertEqual(report.witness, {"object": "x"})

    def test_budget(self):
        C = boolean_lattice("abc").category()
        report = check_category_property(C, "Pushouts", max_steps=1)
        self.assertEqual(report.verdict, Verdict.UNKNOWN)
        self.assertEqual(report.witness, {"budget": "max_steps", "limit": 1})

    def test_unknown_property(self):
        with self.assertRaises(ValueError):
            check_category_property(walking_span(), "Pretty")

    def test_contractibility(self):
        report = contractibility_certificate(poset_with_top().category())
        self.assertTrue(report.is_holds)
        self.assertEqual(report.witness, {"criterion": "Terminal", "object": "t"})
        report = contractibility_certificate(walking_span())
        self.assertEqual(report.witness, {"criterion": "Initial", "object": "A"})
        self.assertEqual(
            contractibility_certificate(circle_poset().category()).verdict, Verdict.UNKNOWN)
        empty = FiniteCategory([], [], {}, {})
        self.assertTrue(contractibility_certificate(empty).is_fails)

    def test_terminal_implies_filtered(self):
        for name, build in sorted(bundled_categories().items()):
            C = build()
            if check_category_property(C, "Terminal").is_holds:
                self.assertTrue(check_category_property(C, "Filtered").is_holds, name)
            if check_category_property(C, "Initial").is_holds:
                self.assertTrue(check_category_property(C, "Cofiltered").is_holds, name)


class TestMonsterReport(unittest.TestCase):

    def test_injections(self):
        universal, homogeneous = monster_report(injections(5), small_objects(3), "U5")
        self.assertTrue(universal.is_holds)
        self.assertTrue(homogeneous.is_holds)
        self.assertEqual(homogeneous.details["automorphisms"], 120)

    def test_classifying(self):
        universal, homogeneous = monster_report(symmetric_classifying(3), ["o"], "o")
        self.assertTrue(universal.is_holds)
        self.assertTrue(homogeneous.is_holds)

    def test_failures(self):
        universal, _ = monster_report(walking_arrow(), ["b"], "a")
        self.assertTrue(universal.is_fails)
        self.assertEqual(universal.witness["object"], "b")
        pair = FiniteCategory(
            ["a", "b"],
            [("1_a", "a", "a"), ("1_b", "b", "b"), ("f", "a", "b"), ("g", "a", "b")],
            {"a": "1_a", "b": "1_b"}, {})
        universal, homogeneous = monster_report(pair, ["a"], "b")
        self.assertTrue(universal.is_holds)
        self.assertTrue(homogeneous.is_fails)
        self.assertEqual(homogeneous.witness, {"object": "a", "f": "f", "g": "g"})


if __name__ == '__main__':
    unittest.main()
