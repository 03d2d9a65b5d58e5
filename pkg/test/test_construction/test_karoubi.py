import unittest

from fincat.category import FiniteCategory
from fincat.construction import idempotents, karoubi_envelope
from fincat.corpus import cyclic_classifying, walking_idempotent
from fincat.homotopy import nerve_homology


class TestKaroubiEnvelope(unittest.TestCase):

    def test_idempotents(self):
        C = walking_idempotent()
        self.assertEqual([C.morphisms[e] for e in idempotents(C)], ["1_o", "e"])
        self.assertEqual(len(idempotents(cyclic_classifying(3))), 1)

    def test_split(self):
        C = walking_idempotent()
        E, inclusion = karoubi_envelope(C)
        self.assertEqual(E.name, "Kar(Idempotent)")
        self.assertEqual(E.objects, ("(o,e)", "o"))
        self.assertEqual(E.n_morphisms, 5)
        # e = r . s with s . r the identity of the splitting object
        s, r = "[e:o->(o,e)]", "[e:(o,e)->o]"
        self.assertEqual(E.compose(r, s), "e")
        self.assertEqual(E.compose(s, r), E.identity_of("(o,e)"))
        self.assertEqual(inclusion.on_morphism("e"), "e")

    def test_split_label_taken(self):
        C = FiniteCategory(
            ["X", "(X,e)"],
            [("1_X", "X", "X"), ("e", "X", "X"), ("1_(X,e)", "(X,e)", "(X,e)")],
            {"X": "1_X", "(X,e)": "1_(X,e)"}, {("e", "e"): "e"})
        E, _ = karoubi_envelope(C)
        self.assertEqual(E.objects, ("(X,e)", "(X,e)'", "X"))
        self.assertEqual(E.n_morphisms, 6)
        self.assertEqual(E.identity_of("(X,e)'"), "[e:(X,e)'->(X,e)']")
        self.assertEqual(E.hom("(X,e)", "X"), [])

    def test_without_idempotents(self):
        C = cyclic_classifying(2)
        E, _ = karoubi_envelope(C, name="K")
        self.assertEqual((E.n_objects, E.n_morphisms), (1, 2))
        self.assertEqual(E.name, "K")

    def test_inclusion_preserves_homology(self):
        for C in (walking_idempotent(), cyclic_classifying(2)):
            E, _ = karoubi_envelope(C)
            self.assertEqual(nerve_homology(E, 2), nerve_homology(C, 2))


if __name__ == '__main__':
    unittest.main()
