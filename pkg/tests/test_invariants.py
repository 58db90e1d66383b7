"""Tests for focus-focus heights and the height comparison."""
from math import pi, sqrt
import os
import unittest
from unittest import mock

from semitoric_families.enums.system_id_enum import SystemIdEnum
from semitoric_families.exceptions.domain_error import DomainError
from semitoric_families.exceptions.inadmissible_error import InadmissibleError
from semitoric_families.invariants import (
    gamma_grid,
    height_s2xs2,
    height_w2,
    match_and_compare,
    s2xs2_upper_bound,
    sublevel_area_oracle,
    sublevel_areas,
    w2_radicand,
    w2_rho_minus,
)
from semitoric_families.model_systems import build_family
from semitoric_families.reduced_spaces import reduced_hamiltonian
from semitoric_families.utils.constants import THREADS_ENV_VAR


class TestW2Heights(unittest.TestCase):

    def test_rho_minus(self):
        self.assertAlmostEqual(w2_radicand(1.0, 1.0, 0.45), 6.29)
        rho_minus = w2_rho_minus(1.0, 1.0, 0.45)
        self.assertAlmostEqual(rho_minus, sqrt(2 - sqrt(6.29) / 1.35))
        self.assertLess(rho_minus, sqrt(2))

    def test_rho_minus_not_real(self):
        with self.assertRaises(DomainError):
            w2_rho_minus(1.0, 1.0, 0.1)

    def test_conservation_and_audit(self):
        result = height_w2(2.0, 2.0, 0.35, audit=True)
        self.assertLess(result.conservation_gap, 1e-12)
        self.assertGreater(result.h1, 0.0)
        self.assertLess(result.h1, 2.0)
        self.assertLess(result.audit_gap, 1e-7)

    def test_oracle_agrees_with_quadrature(self):
        result = height_w2(2.0, 2.0, 0.35, oracle_samples=200_000)
        self.assertEqual(result.oracle_samples, 200_000)
        self.assertLess(abs(result.oracle_value - result.h1), 1e-2)

    def test_gamma_outside_window(self):
        with self.assertRaises(DomainError):
            height_w2(1.0, 1.0, 0.6)


class TestS2xS2Heights(unittest.TestCase):

    def test_conservation(self):
        result = height_s2xs2(1.0, 2.0)
        self.assertLess(result.conservation_gap, 1e-12)
        self.assertEqual(result.fiber_height, 2.0)
        self.assertGreater(result.h1, 0.0)
        self.assertLess(result.h1, 2.0)

    def test_upper_bound(self):
        self.assertAlmostEqual(s2xs2_upper_bound(2.0), sqrt(7 + 4 * sqrt(5)))
        with self.assertRaises(DomainError):
            s2xs2_upper_bound(20.0)

    def test_radii_order(self):
        with self.assertRaises(DomainError):
            height_s2xs2(2.0, 1.0)

    def test_oracle_agrees_with_quadrature(self):
        result = height_s2xs2(1.0, 2.0, oracle_samples=200_000)
        self.assertLess(abs(result.oracle_value - result.h1), 1e-2)


class TestSublevelAreaOracle(unittest.TestCase):

    def setUp(self):
        self.rh = reduced_hamiltonian(build_family(SystemIdEnum.W2_TWO_PARAM), (0.5, 0.5), 1.0)

    def test_full_and_empty_levels(self):
        full = sublevel_area_oracle(self.rh, 1e6, 2000)
        self.assertAlmostEqual(full.area, self.rh.total_area)
        self.assertEqual(full.stderr, 0.0)
        self.assertEqual(sublevel_area_oracle(self.rh, -1e6, 2000).area, 0.0)
        self.assertAlmostEqual(full.height, self.rh.total_area / (2 * pi))

    def test_independent_of_thread_count(self):
        with mock.patch.dict(os.environ, {THREADS_ENV_VAR: "1"}):
            single = sublevel_area_oracle(self.rh, 0.0, 50_000, chunk=5_000)
        with mock.patch.dict(os.environ, {THREADS_ENV_VAR: "4"}):
            pooled = sublevel_area_oracle(self.rh, 0.0, 50_000, chunk=5_000)
        self.assertEqual(single.area, pooled.area)
        self.assertEqual(single.stderr, pooled.stderr)

    def test_shared_seed_gives_monotone_areas(self):
        areas = sublevel_areas(self.rh, [-0.5, -0.1, 0.0, 0.1, 0.5], 20_000)
        self.assertEqual(areas, sorted(areas))


class TestMatchAndCompare(unittest.TestCase):

    def test_gamma_grid(self):
        grid = gamma_grid(1.0, 1.0)
        self.assertEqual(len(grid), 20)
        self.assertTrue(all(1 / 6 < g < 1 / 2 for g in grid))

    def test_monotone_without_crossing(self):
        comparison = match_and_compare(1.0, 2.0)
        self.assertEqual((comparison.alpha, comparison.beta), (2.0, 2.0))
        self.assertEqual(len(comparison.rows), 20)
        self.assertTrue(comparison.monotone)
        self.assertFalse(comparison.crossing)

    def test_crossing(self):
        comparison = match_and_compare(3.0, 4.0)
        self.assertTrue(comparison.crossing)
        h1_s2 = comparison.rows[0].h1_s2
        self.assertAlmostEqual(height_w2(2.0, 6.0, comparison.gamma_star).h1, h1_s2, places=6)

    def test_non_real_rho_minus_dropped(self):
        with self.assertLogs("semitoric_families.invariants", level="WARNING"):
            comparison = match_and_compare(1.0, 2.0, gammas=[0.1, 0.3])
        self.assertEqual(comparison.dropped, [0.1])
        self.assertEqual([row.gamma for row in comparison.rows], [0.3])

    def test_mismatched_scalings(self):
        with self.assertRaises(InadmissibleError):
            match_and_compare(1.0, 2.0, alpha=3.0)

    def test_csv_rows(self):
        comparison = match_and_compare(1.0, 2.0, gammas=[0.3, 0.4])
        self.assertEqual(comparison.csv_rows()[0][4], "")


if __name__ == "__main__":
    unittest.main()
