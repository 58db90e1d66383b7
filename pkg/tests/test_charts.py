"""Tests for Hirzebruch and S2 x S2 charts."""
import unittest

import numpy as np

from semitoric_families.charts import HirzebruchSurface, SpherePair, hirzebruch_lift, symplectic_matrix
from semitoric_families.enums.chart_id_enum import ChartIdEnum
from semitoric_families.exceptions.domain_error import DomainError

HIRZEBRUCH_CHARTS = (ChartIdEnum.U13, ChartIdEnum.U14, ChartIdEnum.U23, ChartIdEnum.U24)
POLE_CHARTS = (ChartIdEnum.POLES_NN, ChartIdEnum.POLES_NS, ChartIdEnum.POLES_SN, ChartIdEnum.POLES_SS)


class TestHirzebruchSurface(unittest.TestCase):

    def setUp(self):
        self.surface = HirzebruchSurface(1, 1.0, 2.0)
        self.coords = np.array([0.3, 0.1, 0.5, -0.2])

    def test_origin_lift(self):
        point = hirzebruch_lift(2, 1.0, 1.0, ChartIdEnum.U14, [0, 0, 0, 0])
        moduli = [abs(z) ** 2 for z in point.representative]
        np.testing.assert_allclose(moduli, [6.0, 0.0, 0.0, 2.0], atol=1e-12)
        self.assertLess(point.residual, 1e-12)

    def test_lift_lies_on_level_set(self):
        for n in (1, 2):
            surface = HirzebruchSurface(n, 1.0, 2.0)
            for chart in HIRZEBRUCH_CHARTS:
                u = surface.lift(chart, self.coords)
                self.assertLess(surface.level_residual(u), 1e-12, f"n={n} {chart.name}")

    def test_chart_round_trip(self):
        for chart in HIRZEBRUCH_CHARTS:
            u = self.surface.lift(chart, self.coords)
            np.testing.assert_allclose(self.surface.to_chart(u, chart), self.coords, atol=1e-12)

    def test_change_of_chart_keeps_level(self):
        u = self.surface.lift(ChartIdEnum.U14, self.coords)
        other = self.surface.to_chart(u, ChartIdEnum.U23)
        v = self.surface.lift(ChartIdEnum.U23, other)
        np.testing.assert_allclose(np.abs(v) ** 2, np.abs(u) ** 2, atol=1e-12)

    def test_vectorised_lift(self):
        batch = np.stack([self.coords, np.zeros(4)])
        self.assertEqual(self.surface.lift(ChartIdEnum.U13, batch).shape, (2, 4))

    def test_outside_chart_domain(self):
        with self.assertRaises(DomainError):
            self.surface.lift(ChartIdEnum.U14, np.array([0.0, 0.0, 3.0, 0.0]))
        self.assertFalse(self.surface.in_domain(ChartIdEnum.U14, [0.0, 0.0, 3.0, 0.0]))
        self.assertTrue(self.surface.in_domain(ChartIdEnum.U14, self.coords))

    def test_sphere_chart_rejected(self):
        with self.assertRaises(DomainError):
            self.surface.lift(ChartIdEnum.POLES_NN, self.coords)

    def test_to_chart_needs_nonzero_slots(self):
        u = self.surface.lift(ChartIdEnum.U14, np.zeros(4))
        with self.assertRaises(DomainError):
            self.surface.to_chart(u, ChartIdEnum.U23)

    def test_invalid_parameters(self):
        with self.assertRaises(DomainError):
            HirzebruchSurface(-1, 1.0, 1.0)
        with self.assertRaises(DomainError):
            HirzebruchSurface(1, 0.0, 1.0)

    def test_wrong_coordinate_count(self):
        with self.assertRaises(DomainError):
            hirzebruch_lift(1, 1.0, 1.0, ChartIdEnum.U14, [0, 0, 0])


class TestSpherePair(unittest.TestCase):

    def setUp(self):
        self.spheres = SpherePair(1.0, 2.0)

    def test_poles(self):
        p = self.spheres.lift(ChartIdEnum.POLES_NS, np.zeros(4))
        np.testing.assert_allclose(p, [0, 0, 1, 0, 0, -1], atol=1e-15)

    def test_pole_chart_round_trip(self):
        coords = np.array([0.3, -0.2, 0.4, 0.1])
        for chart in POLE_CHARTS:
            p = self.spheres.lift(chart, coords)
            self.assertLess(self.spheres.sphere_residual(p), 1e-12)
            np.testing.assert_allclose(self.spheres.to_chart(p, chart), coords, atol=1e-12)

    def test_ambient_chart_is_identity(self):
        p = np.array([0.6, 0.0, 0.8, 0.0, 0.6, 0.8])
        np.testing.assert_allclose(self.spheres.lift(ChartIdEnum.S2_S2, p), p)

    def test_off_sphere_rejected(self):
        with self.assertRaises(DomainError):
            self.spheres.check_ambient(np.array([1.0, 1.0, 0.0, 0.0, 0.0, 1.0]))
        with self.assertRaises(DomainError):
            self.spheres.check_ambient(np.zeros(5))

    def test_antipodal_pole_outside_chart(self):
        with self.assertRaises(DomainError):
            self.spheres.to_chart(np.array([0.0, 0.0, -1.0, 0.0, 0.0, 1.0]), ChartIdEnum.POLES_NN)

    def test_hirzebruch_chart_rejected(self):
        with self.assertRaises(DomainError):
            self.spheres.lift(ChartIdEnum.U14, np.zeros(4))

    def test_poisson_bracket_of_coordinates(self):
        # {z1, x1} = y1 / R1
        p = np.array([0.0, 1.0, 0.0, 0.0, 0.0, 1.0])
        grad_z1 = np.array([0.0, 0.0, 1.0, 0.0, 0.0, 0.0])
        grad_x1 = np.array([1.0, 0.0, 0.0, 0.0, 0.0, 0.0])
        self.assertAlmostEqual(SpherePair(2.0, 3.0).poisson_bracket(grad_z1, grad_x1, p), 0.5)

    def test_radii_positive(self):
        with self.assertRaises(DomainError):
            SpherePair(0.0, 1.0)


class TestSymplecticMatrix(unittest.TestCase):

    def test_darboux_form(self):
        omega = symplectic_matrix(ChartIdEnum.U14)
        np.testing.assert_array_equal(omega, -omega.T)
        self.assertEqual(omega[0, 1], 1.0)
        self.assertEqual(omega[2, 3], 1.0)
        self.assertAlmostEqual(np.linalg.det(omega), 1.0)

    def test_ambient_sphere_coordinates_rejected(self):
        with self.assertRaises(DomainError):
            symplectic_matrix(ChartIdEnum.S2_S2)


if __name__ == "__main__":
    unittest.main()
