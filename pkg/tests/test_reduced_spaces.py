"""Tests for reduced spaces and reduced Hamiltonians."""
from fractions import Fraction
from math import pi
import unittest

import numpy as np

from semitoric_families.enums.morse_type_enum import MorseTypeEnum
from semitoric_families.enums.system_id_enum import SystemIdEnum
from semitoric_families.exceptions.domain_error import DomainError
from semitoric_families.model_systems import build_family
from semitoric_families.reduced_spaces import (
    PROFILE_CSV_HEADER,
    CylindricalReducedHamiltonian,
    SphereReducedHamiltonian,
    critical_point_sweep,
    implicit_residual,
    profile_negativity_certificate,
    profile_rows,
    radial_profile,
    reduced_critical_points,
    reduced_hamiltonian,
    reduced_section,
    reduced_vs_ambient_gap,
    w1_quadratic_in_j,
)


class TestCylindricalReducedHamiltonian(unittest.TestCase):

    def setUp(self):
        self.family = build_family(SystemIdEnum.W1_MOVING_AB)
        self.rh = reduced_hamiltonian(self.family, 0.3, 1.0)

    def test_shape(self):
        self.assertIsInstance(self.rh, CylindricalReducedHamiltonian)
        self.assertAlmostEqual(self.rh.rho_max, 2.0)
        self.assertAlmostEqual(self.rh.total_area, 4 * pi)
        self.assertAlmostEqual(self.rh.coefficients["a"], 0.2)
        self.assertAlmostEqual(self.rh.coefficients["b"], 0.0675)

    def test_value(self):
        # 0.2 rho^2 + 0.0675 rho (4 - rho^2) cos(theta)
        self.assertAlmostEqual(float(self.rh.value(1.0, 0.0)), 0.4025)
        self.assertAlmostEqual(float(self.rh.value(1.0, pi)), -0.0025)

    def test_gradient_matches_difference_quotient(self):
        r, theta, h = 1.1, 0.7, 1e-6
        h_r, h_theta = self.rh.gradient(r, theta)
        self.assertAlmostEqual(h_r, float(self.rh.value(r + h, theta) - self.rh.value(r - h, theta)) / (2 * h), places=6)
        self.assertAlmostEqual(h_theta, float(self.rh.value(r, theta + h) - self.rh.value(r, theta - h)) / (2 * h), places=6)

    def test_hessian_needs_positive_q(self):
        with self.assertRaises(DomainError):
            self.rh.hessian(0.0, 0.0)
        self.assertEqual(self.rh.hessian(1.0, 0.0).shape, (2, 2))

    def test_area_derivative(self):
        self.assertAlmostEqual(self.rh.area_derivative(1.0), 0.4)

    def test_area_coordinate(self):
        np.testing.assert_allclose(self.rh.area_coordinate(np.array([0.0, 0.25, 1.0])), [0.0, 1.0, 2.0])

    def test_sublevel_angle_measure_extremes(self):
        r = np.array([0.5, 1.0, 1.5])
        np.testing.assert_allclose(self.rh.sublevel_angle_measure(r, 100.0), 2 * pi)
        np.testing.assert_allclose(self.rh.sublevel_angle_measure(r, -100.0), 0.0)

    def test_lift_agrees_with_ambient(self):
        self.assertLess(reduced_vs_ambient_gap(self.rh), 1e-9)

    def test_implicit_relation(self):
        rho = np.linspace(0.1, 1.9, 7)
        self.assertLess(implicit_residual(self.family, 1.0, rho, np.full(7, 0.4)), 1e-10)

    def test_to_dict(self):
        data = self.rh.to_dict()
        self.assertEqual(data["system"], "W1_MOVING_AB")
        self.assertEqual(data["domain"], [0.0, 2.0])

    def test_j_outside_range(self):
        for j in (0.0, 3.0):
            with self.assertRaises(DomainError):
                reduced_hamiltonian(self.family, 0.3, j)

    def test_family_without_reduction(self):
        with self.assertRaises(DomainError):
            reduced_hamiltonian(build_family(SystemIdEnum.DEGEN_APPEARANCE), 0.3, 0.0)


class TestSphereReducedHamiltonian(unittest.TestCase):

    def setUp(self):
        self.family = build_family(SystemIdEnum.COUPLED_ANGULAR)
        self.rh = reduced_hamiltonian(self.family, 0.5, 0.0)

    def test_domain(self):
        self.assertIsInstance(self.rh, SphereReducedHamiltonian)
        self.assertEqual((self.rh.lo, self.rh.hi), (-1.0, 1.0))
        self.assertAlmostEqual(self.rh.total_area, 4 * pi)
        shifted = reduced_hamiltonian(self.family, 0.5, 2.5)
        self.assertAlmostEqual(shifted.lo, 0.5)
        self.assertAlmostEqual(shifted.hi, 1.0)

    def test_value(self):
        # 0.5 z1 - 0.25 z1^2 + 0.5 sqrt((1 - z1^2)(1 - z1^2 / 4)) cos(theta)
        self.assertAlmostEqual(float(self.rh.value(0.0, 0.0)), 0.5)
        self.assertAlmostEqual(float(self.rh.value(0.0, pi / 2)), 0.0)

    def test_lift_agrees_with_ambient(self):
        self.assertLess(reduced_vs_ambient_gap(self.rh), 1e-9)

    def test_rho_coordinate(self):
        np.testing.assert_allclose(SphereReducedHamiltonian.rho_coordinate(np.array([1.0, 0.0])), [0.0, 1.0])
        self.assertAlmostEqual(float(self.rh.rho_weight(1.0)), 1.0)

    def test_j_outside_range(self):
        with self.assertRaises(DomainError):
            reduced_hamiltonian(self.family, 0.5, 3.0)


class TestRadialProfile(unittest.TestCase):

    def test_w1_profile(self):
        profile, rho_max = radial_profile(build_family(SystemIdEnum.W1_MOVING_AB), 1.0)
        self.assertAlmostEqual(rho_max, 2.0)
        self.assertAlmostEqual(profile(0.0), 16.0)
        self.assertAlmostEqual(profile(4.0), 0.0)

    def test_w2_profile(self):
        profile, rho_max = radial_profile(build_family(SystemIdEnum.W2_TRANS_B), 1.5)
        self.assertAlmostEqual(rho_max ** 2, 2.0)
        self.assertAlmostEqual(profile(1.0), 4.0)

    def test_w2_range(self):
        with self.assertRaises(DomainError):
            radial_profile(build_family(SystemIdEnum.W2_TRANS_B), 3.0)


class TestReducedCriticalPoints(unittest.TestCase):

    def test_only_poles_without_coupling(self):
        rh = reduced_hamiltonian(build_family(SystemIdEnum.W1_MOVING_AB), 0.0, 1.0)
        points = reduced_critical_points(rh)
        self.assertEqual(len(points), 2)
        self.assertTrue(all(p.pole for p in points))
        self.assertTrue(all(p.morse_type == MorseTypeEnum.ELLIPTIC for p in points))

    def test_sphere_poles_without_coupling(self):
        rh = reduced_hamiltonian(build_family(SystemIdEnum.COUPLED_ANGULAR), 0.0, 0.5)
        points = reduced_critical_points(rh)
        self.assertEqual([p.rho for p in points], [rh.lo, rh.hi])

    def test_points_on_axis_are_critical(self):
        rh = reduced_hamiltonian(build_family(SystemIdEnum.W1_MOVING_AB), 0.3, 1.0)
        points = reduced_critical_points(rh)
        self.assertGreater(len(points), 0)
        for p in points:
            self.assertIn(p.theta, (0.0, pi))
            self.assertLess(p.residual, 1e-9)
            self.assertAlmostEqual(p.value, float(rh.value(p.rho, p.theta)))

    def test_sweep_finds_nothing_new(self):
        rh = reduced_hamiltonian(build_family(SystemIdEnum.W1_MOVING_AB), 0.3, 1.0)
        self.assertEqual(critical_point_sweep(rh, reduced_critical_points(rh), starts=16), [])


class TestProfileCertificate(unittest.TestCase):

    def test_w1_quadratic_coefficients(self):
        # alpha = 1, beta = 2, s = 2
        self.assertEqual(w1_quadratic_in_j(Fraction(1), Fraction(2), Fraction(2)), (-64, 256, -272))

    def test_w1_certificate_is_exact(self):
        certificate = profile_negativity_certificate(build_family(SystemIdEnum.W1_MOVING_AB), 0.5, 1.0)
        self.assertTrue(certificate.exact_identity)
        self.assertTrue(certificate.polynomial_match)
        self.assertFalse(certificate.numerical)
        self.assertTrue(certificate.passed)
        self.assertGreater(certificate.margin, 0.0)

    def test_w2_certificate_is_numerical(self):
        certificate = profile_negativity_certificate(build_family(SystemIdEnum.W2_TRANS_B), 0.5, 1.5, grid_points=500)
        self.assertIsNone(certificate.exact_identity)
        self.assertTrue(certificate.numerical)
        self.assertLess(certificate.max_f, 0.0)

    def test_sphere_family_rejected(self):
        with self.assertRaises(DomainError):
            profile_negativity_certificate(build_family(SystemIdEnum.COUPLED_ANGULAR), 0.5, 0.0)


class TestSectionsAndRows(unittest.TestCase):

    def test_reduced_section(self):
        section = reduced_section(build_family(SystemIdEnum.W1_MOVING_AB), 1.0, count=51)
        self.assertAlmostEqual(section.r_values[-1], 2.0)
        np.testing.assert_allclose(section.x_upper, -section.x_lower)
        self.assertAlmostEqual(section.x_upper[0], 0.0)
        self.assertAlmostEqual(section.x_upper[-1], 0.0, places=6)
        self.assertEqual(len(section.csv_rows()), 51)

    def test_profile_rows(self):
        rh = reduced_hamiltonian(build_family(SystemIdEnum.W1_MOVING_AB), 0.5, 1.0)
        rows = profile_rows(rh, count=10)
        self.assertEqual(len(rows), 10)
        self.assertEqual(len(rows[0]), len(PROFILE_CSV_HEADER))
        self.assertTrue(all(row[3] < 0 for row in rows))


if __name__ == "__main__":
    unittest.main()
