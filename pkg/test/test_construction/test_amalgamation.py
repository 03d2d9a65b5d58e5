import unittest

from fincat.category import check_category_property
from fincat.construction import adjoin_amalgamation_step, iterate_construction
from fincat.corpus import circle_poset, symmetric_classifying, walking_span
from fincat.errors import ResourceLimit, SpanNotInCategory


class TestAmalgamationStep(unittest.TestCase):

    def test_walking_span(self):
        step = adjoin_amalgamation_step(walking_span())
        N = "amal(A,f,g)"
        self.assertEqual(step.amalgams, [{
            "span": ["A", "f", "g"], "object": N,
            "j": f"{N}:j.1_B", "k": f"{N}:k.1_C"}])
        D = step.category
        self.assertEqual((D.n_objects, D.n_morphisms), (4, 9))
        self.assertEqual(D.compose(f"{N}:j.1_B", "f"), D.compose(f"{N}:k.1_C", "g"))
        self.assertTrue(check_category_property(D, "AP", spans=[("f", "g")]).is_holds)
        self.assertEqual(step.inclusion.on_object("A"), "A")

    def test_budget(self):
        with self.assertRaises(ResourceLimit):
            adjoin_amalgamation_step(walking_span(), max_objects=3)

    def test_bad_span(self):
        with self.assertRaises(SpanNotInCategory):
            adjoin_amalgamation_step(walking_span(), spans=[("f", "1_B")])


class TestIterateConstruction(unittest.TestCase):

    def test_walking_span(self):
        stages = iterate_construction(walking_span(), 1)
        self.assertEqual(len(stages), 2)
        self.assertNotIn("ap_previous", stages[0].report)
        self.assertEqual(stages[1].report["ap_previous"], "Holds")
        self.assertEqual(stages[1].report["amalgams"], 1)
        self.assertEqual(stages[1].to_dict()["name"], "Span^1")

    def test_group_unchanged(self):
        C = symmetric_classifying(2)
        stages = iterate_construction(C, 1)
        self.assertEqual(stages[1].report["amalgams"], 0)
        self.assertEqual(stages[1].category.n_morphisms, C.n_morphisms)
        self.assertEqual(stages[1].report["ap_previous"], "Holds")

    def test_circle_keeps_homology(self):
        stages = iterate_construction(circle_poset().category(name="Circle"), 2)
        for stage in stages:
            self.assertEqual(stage.report["homology"], "H0 = Z, H1 = Z, H2 = 0")
            self.assertEqual(stage.report["all_mono"], "Holds")
        self.assertEqual(stages[1].report["amalgams"], 2)
        self.assertEqual(stages[2].report["ap_previous"], "Holds")


if __name__ == '__main__':
    unittest.main()
