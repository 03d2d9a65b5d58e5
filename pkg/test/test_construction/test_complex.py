import unittest

from fincat.construction import (
    barycentric_subdivide,
    boundary_complex,
    face_poset,
    order_complex,
    simplex,
    simplicial_homology,
    SimplicialComplex,
)
from fincat.corpus import circle_poset
from fincat.errors import InvalidComplex, ResourceLimit
from fincat.homotopy import nerve_homology


class TestSimplicialComplex(unittest.TestCase):

    def test_facets(self):
        K = SimplicialComplex([["1", "0"], ["1", "2"]], vertices=["3"])
        self.assertEqual(K.vertices, ("0", "1", "2", "3"))
        self.assertEqual(K.facets, (("3",), ("0", "1"), ("1", "2")))
        self.assertEqual(K.dim, 1)
        self.assertEqual(simplicial_homology(K, 1).betti, (2, 0))

    def test_invalid(self):
        with self.assertRaises(InvalidComplex):
            SimplicialComplex([["0", "1"], ["0"]])
        with self.assertRaises(InvalidComplex):
            SimplicialComplex([[]])

    def test_spheres(self):
        self.assertEqual(simplicial_homology(boundary_complex(2), 2).betti, (1, 1, 0))
        self.assertEqual(simplicial_homology(boundary_complex(3), 3).betti, (1, 0, 1, 0))
        self.assertTrue(simplicial_homology(simplex(3), 3).reduced_vanishes())

    def test_budget(self):
        with self.assertRaises(ResourceLimit):
            simplex(9).faces(4, max_simplices=50)

    def test_equality(self):
        self.assertEqual(boundary_complex(2), SimplicialComplex([["0", "1"], ["1", "2"], ["2", "0"]]))
        self.assertNotEqual(boundary_complex(2), simplex(2))


class TestFacePoset(unittest.TestCase):

    def test_hexagon(self):
        poset, C = face_poset(boundary_complex(2), name="Hexagon")
        self.assertEqual(len(poset), 6)
        self.assertEqual(C.n_morphisms, 12)
        self.assertEqual(C.name, "Hexagon")
        self.assertTrue(poset.is_leq("{0}", "{0,1}"))

    def test_homology_agrees(self):
        for K in (boundary_complex(2), boundary_complex(3), simplex(2)):
            _, C = face_poset(K)
            self.assertEqual(nerve_homology(C, 2), simplicial_homology(K, 2))

    def test_subdivision(self):
        K = barycentric_subdivide(boundary_complex(2))
        self.assertEqual(len(K.vertices), 6)
        self.assertEqual(len(K.facets), 6)
        for K in (boundary_complex(2), boundary_complex(3)):
            self.assertEqual(
                simplicial_homology(barycentric_subdivide(K), 2),
                simplicial_homology(K, 2))

    def test_order_complex(self):
        K = order_complex(circle_poset())
        self.assertEqual(len(K.facets), 4)
        self.assertEqual(simplicial_homology(K, 1).betti, (1, 1))


if __name__ == '__main__':
    unittest.main()
