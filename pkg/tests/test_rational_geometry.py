"""Tests for exact lattice-affine geometry."""
from fractions import Fraction
import unittest

from hypothesis import given, settings, strategies as st

from semitoric_families.exceptions.degenerate_polygon_error import DegeneratePolygonError
from semitoric_families.exceptions.domain_error import DomainError
from semitoric_families.rational_geometry import (
    ConvexPolygon,
    LatticeMatrix,
    PiecewiseShear,
    T,
    apply_piecewise,
    hull,
    is_convex_cycle,
    parse_rat,
    point,
    primitive_vector,
    rat_to_str,
    sl2z_length,
)

small_ints = st.integers(min_value=-6, max_value=6)


class TestParseRat(unittest.TestCase):

    def test_string_literals(self):
        self.assertEqual(parse_rat("6/4"), Fraction(3, 2))
        self.assertEqual(parse_rat(" -1/2 "), Fraction(-1, 2))
        self.assertEqual(parse_rat(7), Fraction(7))

    def test_float_rejected(self):
        with self.assertRaises(DomainError):
            parse_rat(0.5)

    def test_bool_rejected(self):
        with self.assertRaises(DomainError):
            parse_rat(True)

    def test_malformed_literal(self):
        with self.assertRaises(DomainError):
            parse_rat("1/0")
        with self.assertRaises(DomainError):
            parse_rat("half")

    def test_rat_to_str(self):
        self.assertEqual(rat_to_str(Fraction(-3, 6)), "-1/2")
        self.assertEqual(rat_to_str(Fraction(2)), "2/1")


class TestSl2zLength(unittest.TestCase):

    def test_axis_segment(self):
        self.assertEqual(sl2z_length(point(0, 0), point(3, 0)), 3)

    def test_diagonal_segment(self):
        self.assertEqual(sl2z_length(point(0, 0), point(2, 2)), 2)

    def test_primitive_direction_with_rational_endpoints(self):
        self.assertEqual(sl2z_length(point(0, 0), point("1/2", 1)), Fraction(1, 2))

    def test_coincident_points(self):
        self.assertEqual(sl2z_length(point(1, 1), point(1, 1)), 0)

    def test_primitive_vector(self):
        self.assertEqual(primitive_vector((Fraction(4), Fraction(-6))), (2, -3))
        with self.assertRaises(DomainError):
            primitive_vector((Fraction(0), Fraction(0)))

    @given(small_ints, small_ints, st.integers(min_value=1, max_value=5))
    @settings(max_examples=50, deadline=None)
    def test_length_invariant_under_t(self, a, b, k):
        p, q = point(0, 0), point(k * a, k * b)
        if a == 0 and b == 0:
            return
        self.assertEqual(sl2z_length(T.apply(p), T.apply(q)), sl2z_length(p, q))


class TestLatticeMatrix(unittest.TestCase):

    def test_shear_power(self):
        self.assertEqual(T.power(3), LatticeMatrix(1, 0, 3, 1))
        self.assertEqual(T.power(-2), LatticeMatrix(1, 0, -2, 1))

    def test_inverse(self):
        m = LatticeMatrix(2, 1, 1, 1)
        self.assertEqual(m @ m.inverse(), LatticeMatrix.identity())

    def test_non_unimodular_has_no_inverse(self):
        with self.assertRaises(DomainError):
            LatticeMatrix(2, 0, 0, 1).inverse()


class TestPiecewiseShear(unittest.TestCase):

    def test_identity_left_of_cut(self):
        ps = PiecewiseShear.single(1, 1)
        self.assertEqual(apply_piecewise(ps, point(0, 5)), point(0, 5))
        self.assertEqual(apply_piecewise(ps, point(1, 5)), point(1, 5))

    def test_shears_right_of_cut(self):
        ps = PiecewiseShear.single(1, -1)
        self.assertEqual(apply_piecewise(ps, point(3, 0)), point(3, -2))

    def test_inverse_round_trip(self):
        ps = PiecewiseShear((Fraction(0), Fraction(2)), (1, -1))
        p = point("7/2", "1/3")
        self.assertEqual(ps.inverse().apply(ps.apply(p)), p)

    def test_abscissas_must_increase(self):
        with self.assertRaises(DomainError):
            PiecewiseShear((Fraction(2), Fraction(1)), (1, 1))


class TestHull(unittest.TestCase):

    def test_drops_collinear_and_interior_points(self):
        poly = hull([point(0, 0), point(2, 0), point(1, 0), point(1, 1), point(1, "1/2")])
        self.assertEqual(poly.vertices, (point(0, 0), point(2, 0), point(1, 1)))

    def test_starts_at_lexicographic_minimum(self):
        poly = hull([point(2, 2), point(0, 2), point(2, 0), point(0, 0)])
        self.assertEqual(poly.vertices[0], point(0, 0))
        self.assertEqual(poly, hull([point(0, 0), point(2, 0), point(2, 2), point(0, 2)]))

    def test_collinear_set_is_degenerate(self):
        with self.assertRaises(DegeneratePolygonError):
            hull([point(0, 0), point(1, 1), point(2, 2)])

    def test_from_vertices_rejects_non_extreme(self):
        with self.assertRaises(DomainError):
            ConvexPolygon.from_vertices([point(0, 0), point(1, 0), point(2, 0), point(0, 1)])


class TestConvexPolygon(unittest.TestCase):

    def setUp(self):
        self.square = hull([point(0, 0), point(2, 0), point(2, 2), point(0, 2)])

    def test_area_and_perimeter(self):
        self.assertEqual(self.square.area(), 4)
        self.assertEqual(self.square.sl2z_perimeter(), 8)

    def test_membership(self):
        self.assertTrue(self.square.interior_contains(point(1, 1)))
        self.assertTrue(self.square.on_boundary(point(2, 1)))
        self.assertFalse(self.square.contains(point(3, 1)))

    def test_vertical_extent(self):
        triangle = hull([point(0, 0), point(2, 0), point(0, 2)])
        self.assertEqual(triangle.vertical_extent(Fraction(1)), (Fraction(0), Fraction(1)))
        self.assertEqual(triangle.vertical_extent(Fraction(0)), (Fraction(0), Fraction(2)))
        self.assertIsNone(triangle.vertical_extent(Fraction(3)))

    def test_neighbours(self):
        prev, nxt = self.square.neighbours(point(2, 0))
        self.assertEqual(prev, point(0, 0))
        self.assertEqual(nxt, point(2, 2))

    def test_vertex_index_missing(self):
        with self.assertRaises(DomainError):
            self.square.vertex_index(point(1, 1))

    def test_subdivided_boundary_is_convex_cycle(self):
        cycle = self.square.subdivided_boundary([Fraction(1)])
        self.assertIn(point(1, 0), cycle)
        self.assertIn(point(1, 2), cycle)
        self.assertTrue(is_convex_cycle(cycle))

    def test_json_round_trip(self):
        self.assertEqual(ConvexPolygon.from_json(self.square.to_json()), self.square)
        self.assertEqual(self.square.to_json()[0], ["0/1", "0/1"])

    def test_translate_and_matrix(self):
        moved = self.square.translate(1, "1/2")
        self.assertEqual(moved.vertices[0], point(1, "1/2"))
        sheared = self.square.apply_matrix(T)
        self.assertEqual(sheared.area(), 4)

    @given(small_ints, small_ints, st.integers(min_value=1, max_value=4))
    @settings(max_examples=50, deadline=None)
    def test_shear_preserves_area_and_perimeter(self, dx, dy, k):
        poly = hull([point(0, 0), point(k, 0), point(0, k)]).translate(dx, dy)
        image = poly.apply_matrix(T.power(dx % 3 + 1))
        self.assertEqual(image.area(), poly.area())
        self.assertEqual(image.sl2z_perimeter(), poly.sl2z_perimeter())


if __name__ == "__main__":
    unittest.main()
