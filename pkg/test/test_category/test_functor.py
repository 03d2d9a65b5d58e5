import unittest

from fincat.category import (
    check_functor_property,
    check_functorial_joint_embedding,
    compose_functors,
    constant_functor,
    FiniteCategory,
    Functor,
    identity_functor,
    identity_transformation,
    NaturalTransformation,
    pair_id,
    product_category,
    projection_functor,
)
from fincat.corpus import cyclic_classifying, walking_arrow, walking_span
from fincat.errors import InvalidFunctor, NaturalityFailure, ShapeMismatch


def hom(C, x, y):
    return C.morphisms[C.hom_indices(C.object_index(x), C.object_index(y))[0]]


class TestFunctor(unittest.TestCase):

    def setUp(self):
        self.arrow = walking_arrow()

    def test_identity_laws(self):
        F = Functor(self.arrow, self.arrow, {"a": "a", "b": "b"}, {"f": "f"})
        self.assertTrue(F.agrees_with(identity_functor(self.arrow)))
        self.assertEqual(F.on_morphism("1_a"), "1_a")
        self.assertTrue(check_functor_property(F, "Valid").is_holds)

    def test_invalid(self):
        with self.assertRaises(InvalidFunctor) as cm:
            Functor(self.arrow, self.arrow, {"a": "b", "b": "a"}, {"f": "f"})
        self.assertEqual(cm.exception.witness["law"], "source/target")
        with self.assertRaises(InvalidFunctor):
            Functor(self.arrow, self.arrow, {"a": "a"}, {})
        F = Functor(
            self.arrow, self.arrow, {"a": "b", "b": "a"}, {"f": "f"}, validate=False)
        report = check_functor_property(F, "Valid")
        self.assertTrue(report.is_fails)
        self.assertEqual(report.witness["morphism"], "f")

    def test_composition(self):
        B = cyclic_classifying(2)
        F = Functor(B, B, {"o": "o"}, {"g": "g"}, name="F")
        FF = compose_functors(F, F)
        self.assertEqual(FF.name, "F.F")
        self.assertTrue(FF.agrees_with(identity_functor(B)))
        with self.assertRaises(ShapeMismatch):
            compose_functors(F, identity_functor(self.arrow))

    def test_projection_is_bifibration(self):
        pi1 = projection_functor(self.arrow, self.arrow, 1)
        for prop in ("Valid", "Fibration", "Opfibration"):
            self.assertTrue(check_functor_property(pi1, prop).is_holds, prop)

    def test_inclusion_lifts(self):
        sub = self.arrow.full_subcategory(["a"])
        F = Functor(sub, self.arrow, {"a": "a"}, {}, name="inc")
        self.assertTrue(check_functor_property(F, "Fibration").is_holds)
        report = check_functor_property(F, "Opfibration")
        self.assertEqual(
            report.witness, {"morphism": "f", "object": "a", "reason": "no lift"})
        with self.assertRaises(ValueError):
            check_functor_property(F, "Faithful")


class TestNaturalTransformation(unittest.TestCase):

    def setUp(self):
        self.arrow = walking_arrow()
        self.identity = identity_functor(self.arrow)
        self.const = constant_functor(self.arrow, self.arrow, "b")

    def test_natural(self):
        alpha = NaturalTransformation(
            self.identity, self.const, {"a": "f", "b": "1_b"}, name="alpha")
        self.assertEqual(alpha.component("a"), "f")
        self.assertEqual(
            alpha.to_dict()["components"], [["a", "f"], ["b", "1_b"]])

    def test_mistyped_component(self):
        with self.assertRaises(NaturalityFailure) as cm:
            NaturalTransformation(self.identity, self.const, {"a": "1_a", "b": "1_b"})
        self.assertEqual(cm.exception.witness["object"], "a")
        with self.assertRaises(NaturalityFailure):
            NaturalTransformation(self.identity, self.const, {"a": "f"})

    def test_shape(self):
        other = identity_functor(walking_span())
        with self.assertRaises(ShapeMismatch):
            NaturalTransformation(self.identity, other, {})

    def test_identity_transformation(self):
        eta = identity_transformation(self.const)
        self.assertEqual(eta.component("a"), "1_b")


class TestFunctorialJointEmbedding(unittest.TestCase):

    def setUp(self):
        C = walking_arrow()
        square = product_category(C, C)

        def join(x, y):
            return "a" if x == y == "a" else "b"

        on_objects = {pair_id(x, y): join(x, y) for x in C.objects for y in C.objects}
        on_morphisms = {}
        for i, f in enumerate(C.morphisms):
            for j, g in enumerate(C.morphisms):
                x, x2 = C.objects[C.src[i]], C.objects[C.tgt[i]]
                y, y2 = C.objects[C.src[j]], C.objects[C.tgt[j]]
                on_morphisms[pair_id(f, g)] = hom(C, join(x, y), join(x2, y2))
        F = Functor(square, C, on_objects, on_morphisms, name="join")
        self.iotas = []
        for which in (1, 2):
            pi = projection_functor(C, C, which, product=square)
            components = {
                pair_id(x, y): hom(C, (x, y)[which - 1], join(x, y))
                for x in C.objects for y in C.objects}
            self.iotas.append(NaturalTransformation(pi, F, components))
        self.C, self.F = C, F

    def test_holds(self):
        report = check_functorial_joint_embedding(self.C, self.F, *self.iotas)
        self.assertTrue(report.is_holds)
        self.assertEqual(report.witness["functor"], "join")
        self.assertTrue(report.details["contractible"])

    def test_swapped(self):
        with self.assertRaises(ShapeMismatch):
            check_functorial_joint_embedding(self.C, self.F, *self.iotas[::-1])


def renamed(C):
    """Copy of C with morphism ids relabelled in reverse sort order."""
    n = C.n_morphisms
    rename = {m: f"r{n - i:03d}" for i, m in enumerate(C.morphisms)}
    back = {v: k for k, v in rename.items()}
    D = FiniteCategory(
        C.objects,
        [(rename[m], C.source(m), C.target(m)) for m in C.morphisms],
        {x: rename[C.identity_of(x)] for x in C.objects},
        lambda g, f: rename[C.compose(back[g], back[f])])
    return D, rename


class TestRelabelling(unittest.TestCase):

    def cases(self):
        arrow, span = walking_arrow(), walking_span()
        sub = arrow.full_subcategory(["a"])
        yield projection_functor(arrow, cyclic_classifying(2), 1)
        yield projection_functor(span, arrow, 2)
        yield Functor(sub, arrow, {"a": "a"}, {})
        yield Functor(arrow.full_subcategory(["b"]), arrow, {"b": "b"}, {})
        yield constant_functor(span, arrow, "b")

    def test_fibration_verdicts(self):
        for F in self.cases():
            dom, rename_dom = renamed(F.dom)
            cod, rename_cod = renamed(F.cod)
            G = Functor(
                dom, cod,
                {x: F.on_object(x) for x in F.dom.objects},
                {rename_dom[m]: rename_cod[F.on_morphism(m)] for m in F.dom.morphisms})
            for prop in ("Valid", "Fibration", "Opfibration"):
                self.assertEqual(
                    check_functor_property(G, prop).verdict,
                    check_functor_property(F, prop).verdict, (F.name, prop))

    def test_inclusion_verdicts(self):
        F = list(self.cases())[2]
        dom, _ = renamed(F.dom)
        cod, rename = renamed(F.cod)
        G = Functor(dom, cod, {"a": "a"}, {})
        self.assertTrue(check_functor_property(G, "Fibration").is_holds)
        report = check_functor_property(G, "Opfibration")
        self.assertTrue(report.is_fails)
        self.assertEqual(report.witness["morphism"], rename["f"])


if __name__ == '__main__':
    unittest.main()
