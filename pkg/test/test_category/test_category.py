import unittest

from fincat.category import FiniteCategory, opposite_category, validate_category
from fincat.corpus import bundled_categories, cyclic_classifying, discrete, walking_span
from fincat.errors import (
    BrokenAssociativity,
    DanglingReference,
    IllTypedComposite,
    MissingComposite,
    ValidationError,
)


BS2 = {
    "name": "BS2",
    "objects": ["o"],
    "morphisms": [{"id": "s", "src": "o", "tgt": "o"}],
    "compose": [["s", "s", "1_o"]],
}


class TestFiniteCategory(unittest.TestCase):

    def test_explicit_table(self):
        C = validate_category(BS2)
        self.assertEqual(C.objects, ("o",))
        self.assertEqual(C.morphisms, ("1_o", "s"))
        self.assertEqual(C.compose("s", "s"), "1_o")
        self.assertEqual(C.compose("1_o", "s"), "s")
        self.assertTrue(C.is_identity("1_o"))
        self.assertEqual(C.inverse_indices().tolist(), [0, 1])

    def test_missing_composite(self):
        raw = {
            "objects": ["a", "b", "c"],
            "morphisms": [
                {"id": "f", "src": "a", "tgt": "b"},
                {"id": "g", "src": "b", "tgt": "c"}],
            "compose": [],
        }
        with self.assertRaises(MissingComposite) as context:
            validate_category(raw)
        self.assertEqual(context.exception.witness, {"g": "g", "f": "f"})

    def test_broken_associativity(self):
        raw = {
            "objects": ["o"],
            "morphisms": [("a", "o", "o"), ("b", "o", "o")],
            "compose": [["a", "a", "1_o"], ["a", "b", "b"], ["b", "a", "a"], ["b", "b", "b"]],
        }
        with self.assertRaises(BrokenAssociativity):
            validate_category(raw)

    def test_ill_typed(self):
        raw = {
            "objects": ["a", "b"],
            "morphisms": [("f", "a", "b")],
            "compose": [["f", "f", "f"]],
        }
        with self.assertRaises(IllTypedComposite):
            validate_category(raw)

    def test_dangling(self):
        with self.assertRaises(DanglingReference):
            validate_category({"objects": ["a"], "morphisms": [("f", "a", "z")]})
        with self.assertRaises(DanglingReference):
            validate_category(dict(BS2, compose=[["s", "t", "s"]]))

    def test_duplicates(self):
        with self.assertRaises(ValidationError):
            validate_category({"objects": ["a", "a"], "morphisms": []})
        with self.assertRaises(ValidationError):
            validate_category({"objects": ["a"], "morphisms": [("f", "a", "a"), ("f", "a", "a")]})

    def test_round_trip(self):
        for C in (validate_category(BS2), walking_span(), cyclic_classifying(3)):
            self.assertEqual(validate_category(C.to_dict()), C)

    def test_double_opposite(self):
        for name, build in sorted(bundled_categories().items()):
            C = build()
            self.assertEqual(opposite_category(opposite_category(C)), C, name)

    def test_hom_and_components(self):
        C = walking_span()
        self.assertEqual(C.hom("A", "B"), ["f"])
        self.assertEqual(C.hom("B", "A"), [])
        self.assertEqual(C.components(), [["A", "B", "C"]])
        self.assertEqual(discrete(3).components(), [["x0"], ["x1"], ["x2"]])

    def test_full_subcategory(self):
        C = walking_span().full_subcategory(["A", "B"])
        self.assertEqual(C.objects, ("A", "B"))
        self.assertEqual(C.morphisms, ("1_A", "1_B", "f"))

    def test_callable_compose(self):
        C = FiniteCategory(
            ["o"], [("0", "o", "o"), ("1", "o", "o"), ("2", "o", "o")],
            {"o": "0"}, lambda g, f: str((int(g) + int(f)) % 3))
        self.assertEqual(C, FiniteCategory(
            ["o"], [("0", "o", "o"), ("1", "o", "o"), ("2", "o", "o")],
            {"o": "0"}, {("1", "1"): "2", ("1", "2"): "0", ("2", "1"): "0", ("2", "2"): "1"}))


if __name__ == '__main__':
    unittest.main()
