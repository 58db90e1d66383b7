"""Tests for the explicit system families."""
from math import sqrt
import unittest
from unittest import mock

import numpy as np

from semitoric_families.enums.chart_id_enum import ChartIdEnum
from semitoric_families.enums.system_id_enum import SystemIdEnum
from semitoric_families.exceptions.domain_error import DomainError
from semitoric_families.model_systems import FAMILY_CLASSES, build_family, evaluate, fixed_points, momentum_image
from semitoric_families.utils.constants import FIXED_POINT_RESIDUAL


class TestBuildFamily(unittest.TestCase):

    def test_every_family_builds_with_defaults(self):
        for system in SystemIdEnum:
            family = build_family(system)
            self.assertEqual(family.system_id, system)
        self.assertEqual(set(FAMILY_CLASSES), set(SystemIdEnum))

    def test_none_parameters_fall_back_to_defaults(self):
        family = build_family(SystemIdEnum.W1_MOVING_AB, alpha=None, beta=None, gamma=None)
        self.assertEqual(family.parameters(), {"alpha": 1.0, "beta": 2.0, "gamma": 9.0 / 40.0})

    def test_gamma_outside_window(self):
        with self.assertRaises(DomainError):
            build_family(SystemIdEnum.W1_MOVING_AB, gamma=0.5)
        with self.assertRaises(DomainError):
            build_family(SystemIdEnum.W2_TWO_PARAM, gamma=0.1)

    def test_unknown_parameter(self):
        with self.assertRaises(DomainError):
            build_family(SystemIdEnum.COUPLED_ANGULAR, alpha=1.0)

    def test_radii_order(self):
        with self.assertRaises(DomainError):
            build_family(SystemIdEnum.COUPLED_ANGULAR, r1=2.0, r2=1.0)

    def test_j0_range(self):
        with self.assertRaises(DomainError):
            build_family(SystemIdEnum.DEGEN_APPEARANCE, j0=2.0)
        with self.assertRaises(DomainError):
            build_family(SystemIdEnum.DEGEN_COLLAPSE, j0=3.0)


class TestTimes(unittest.TestCase):

    def test_scalar_time(self):
        self.assertEqual(build_family(SystemIdEnum.COUPLED_ANGULAR).times(0.25), (0.25,))

    def test_time_outside_unit_interval(self):
        with self.assertRaises(DomainError):
            build_family(SystemIdEnum.COUPLED_ANGULAR).times(1.5)

    def test_arity_mismatch(self):
        with self.assertRaises(DomainError):
            build_family(SystemIdEnum.W2_TWO_PARAM).times(0.5)
        self.assertEqual(build_family(SystemIdEnum.W2_TWO_PARAM).times([0.5, 0.25]), (0.5, 0.25))


class TestClosedFormTimes(unittest.TestCase):

    def test_coupled_angular(self):
        t_minus, t_plus = build_family(SystemIdEnum.COUPLED_ANGULAR).closed_form_transition_times()
        self.assertAlmostEqual(t_minus, 2 / (5 + 2 * sqrt(2)), places=12)
        self.assertAlmostEqual(t_plus, 2 / (5 - 2 * sqrt(2)), places=12)

    def test_w1_moving(self):
        t_minus, t_plus = build_family(SystemIdEnum.W1_MOVING_AB).closed_form_transition_times()
        self.assertAlmostEqual(t_minus, 10 / 29, places=12)
        self.assertAlmostEqual(t_plus, 10 / 11, places=12)

    def test_w1_switch(self):
        t_minus, t_plus = build_family(SystemIdEnum.W1_SWITCH).closed_form_transition_times()
        self.assertAlmostEqual(t_minus, 4 / 11, places=12)
        self.assertAlmostEqual(t_plus, 4 / 5, places=12)

    def test_w2_transitions(self):
        b = build_family(SystemIdEnum.W2_TRANS_B).closed_form_transition_times()
        c = build_family(SystemIdEnum.W2_TRANS_C).closed_form_transition_times()
        self.assertAlmostEqual(b[0], 3 / 4.9, places=12)
        self.assertAlmostEqual(b[1], 3 / 3.1, places=12)
        self.assertAlmostEqual(c[0], 3 / 6.8, places=12)
        self.assertAlmostEqual(c[1], 3 / 3.2, places=12)

    def test_families_without_closed_form(self):
        self.assertIsNone(build_family(SystemIdEnum.DEGEN_BECOME).closed_form_transition_times())


class TestFixedPoints(unittest.TestCase):

    def test_coupled_poles(self):
        inventory = fixed_points(build_family(SystemIdEnum.COUPLED_ANGULAR), 0.5)
        self.assertEqual(inventory.labels, ["NN", "NS", "SN", "SS"])
        self.assertAlmostEqual(inventory.point("NN").j_value, 3.0)
        self.assertAlmostEqual(inventory.point("NS").j_value, -1.0)
        self.assertAlmostEqual(inventory.point("NS").h_value, 0.0)
        self.assertLess(inventory.max_residual, FIXED_POINT_RESIDUAL)

    def test_w1_moving_inventory(self):
        inventory = fixed_points(build_family(SystemIdEnum.W1_MOVING_AB), 0.3)
        self.assertEqual(sorted(inventory.labels), ["A", "B", "C", "D"])
        self.assertAlmostEqual(inventory.point("C").j_value, 1.0)
        self.assertAlmostEqual(inventory.point("C").h_value, 0.8)
        self.assertAlmostEqual(inventory.point("D").j_value, 3.0)
        self.assertAlmostEqual(inventory.point("A").j_value, 0.0)
        self.assertAlmostEqual(inventory.point("B").j_value, 0.0)

    def test_w1_moving_points_symmetric_at_half(self):
        family = build_family(SystemIdEnum.W1_MOVING_AB)
        low, high = family.moving_points(0.5)
        self.assertAlmostEqual(low, -high)
        self.assertLess(high, sqrt(2 * family.beta))

    def test_w1_moving_points_solve_sphere_equation(self):
        family = build_family(SystemIdEnum.W1_MOVING_AB)
        for t in (0.1, 0.3, 0.7, 0.9):
            for x3 in family.moving_points(t):
                self.assertLess(abs(family._sphere_equation(x3, t)), 1e-8 * 24)

    def test_unknown_label(self):
        inventory = fixed_points(build_family(SystemIdEnum.W1_SWITCH), 0.2)
        with self.assertRaises(KeyError):
            inventory.point("NS")

    def test_w1_switch_fixed_sphere_at_half(self):
        family = build_family(SystemIdEnum.W1_SWITCH)
        sets = fixed_points(family, 0.5).critical_sets
        self.assertEqual([c.kind for c in sets], ["fixed-sphere"])
        self.assertAlmostEqual(sets[0].h_value, family.beta / 2)
        self.assertLessEqual(sets[0].max_residual, FIXED_POINT_RESIDUAL)
        self.assertEqual(fixed_points(family, 0.3).critical_sets, [])

    def test_w1_hyperbolic_sphere_points(self):
        inventory = fixed_points(build_family(SystemIdEnum.W1_HYPERBOLIC), 0.5)
        extra = [p for p in inventory.points if p.label.startswith("P")]
        self.assertGreater(len(extra), 0)
        for p in extra:
            self.assertAlmostEqual(p.j_value, 0.0)

    def test_w2_origins(self):
        family = build_family(SystemIdEnum.W2_TWO_PARAM)
        inventory = fixed_points(family, (0.5, 0.5))
        self.assertEqual(sorted(inventory.labels), ["A", "B", "C", "D"])
        self.assertLess(inventory.max_residual, 1e-6)

    def test_degen_appearance_circle(self):
        family = build_family(SystemIdEnum.DEGEN_APPEARANCE)
        sets = fixed_points(family, 0.5).critical_sets
        self.assertEqual([c.kind for c in sets], ["degenerate-circle"])
        self.assertEqual(fixed_points(family, 0.3).critical_sets, [])

    def test_degen_become_critical_circle(self):
        sets = fixed_points(build_family(SystemIdEnum.DEGEN_BECOME), 0.3).critical_sets
        self.assertEqual([c.kind for c in sets], ["critical-circle"])
        self.assertLess(sets[0].max_residual, 1e-6)

    def test_degen_collapse_level(self):
        sets = fixed_points(build_family(SystemIdEnum.DEGEN_COLLAPSE), 0.5).critical_sets
        self.assertEqual([c.kind for c in sets], ["collapsed-level"])
        self.assertLess(sets[0].max_residual, 1e-12)


class TestEvaluateAndBracket(unittest.TestCase):

    def test_evaluate_at_origin_of_u23(self):
        family = build_family(SystemIdEnum.W1_MOVING_AB)
        point = family.chart_point(ChartIdEnum.U23, [0, 0, 0, 0])
        j_value, h_value = evaluate(family, 0.3, point)
        self.assertAlmostEqual(j_value, 1.0)
        self.assertAlmostEqual(h_value, 0.8)

    def test_wrong_chart(self):
        family = build_family(SystemIdEnum.COUPLED_ANGULAR)
        point = family.chart_point(ChartIdEnum.U14, [0, 0, 0, 0])
        with self.assertRaises(DomainError):
            evaluate(family, 0.5, point)

    def test_hirzebruch_families_commute(self):
        coords = [0.3, 0.2, 0.4, -0.1]
        for system in (SystemIdEnum.W1_MOVING_AB, SystemIdEnum.W1_SWITCH, SystemIdEnum.W2_TRANS_B):
            family = build_family(system)
            self.assertLess(abs(family.poisson_bracket(0.4, ChartIdEnum.U14, coords)), 1e-7, system.name)

    def test_w2_two_parameter_commutes(self):
        family = build_family(SystemIdEnum.W2_TWO_PARAM)
        self.assertLess(abs(family.poisson_bracket((0.3, 0.6), ChartIdEnum.U13, [0.1, 0.2, -0.3, 0.2])), 1e-7)

    def test_sphere_families_commute(self):
        p = [0.6, 0.0, 0.8, 0.0, 0.6, 0.8]
        for system in (SystemIdEnum.COUPLED_ANGULAR, SystemIdEnum.HP_TWO_PARAM, SystemIdEnum.DEGEN_COLLAPSE):
            family = build_family(system)
            params = (0.3, 0.7) if family.arity == 2 else 0.3
            self.assertLess(abs(family.poisson_bracket(params, ChartIdEnum.S2_S2, p)), 1e-9, system.name)


class TestMomentumImage(unittest.TestCase):

    def test_coupled_image(self):
        image = momentum_image(build_family(SystemIdEnum.COUPLED_ANGULAR), 0.5, 8)
        self.assertEqual(image.j_values.size, 8 * 8 * 8)
        lo, hi = image.j_range
        self.assertGreaterEqual(lo, -3.0 - 1e-12)
        self.assertLessEqual(hi, 3.0 + 1e-12)
        self.assertEqual([label for label, _, _ in image.overlays], ["NN", "NS", "SN", "SS"])
        rows = image.csv_rows()
        self.assertEqual(len(rows), 8 * 8 * 8 + 4)
        self.assertEqual(rows[0][0], 0.5)
        self.assertEqual(rows[-1][-1], "SS")

    def test_w1_image_j_range(self):
        image = momentum_image(build_family(SystemIdEnum.W1_MOVING_AB), 0.2, 10)
        lo, hi = image.j_range
        self.assertAlmostEqual(lo, 0.0, places=9)
        self.assertAlmostEqual(hi, 3.0, places=9)
        self.assertTrue(all(lo_h <= hi_h for _, lo_h, hi_h in image.envelope))

    def test_two_parameter_rows(self):
        image = momentum_image(build_family(SystemIdEnum.W2_TWO_PARAM), (0.25, 0.75), 8)
        row = image.csv_rows()[0]
        self.assertEqual(row[:3], ["", 0.25, 0.75])

    def test_resolution_floor(self):
        with self.assertRaises(DomainError):
            momentum_image(build_family(SystemIdEnum.COUPLED_ANGULAR), 0.5, 7)

    def test_threads_give_same_image(self):
        family = build_family(SystemIdEnum.W2_TRANS_C)
        single = momentum_image(family, 0.4, 8)
        with mock.patch.dict("os.environ", {"SEMITORIC_FAMILIES_THREADS": "3"}):
            threaded = momentum_image(family, 0.4, 8)
        np.testing.assert_array_equal(single.h_values, threaded.h_values)


if __name__ == "__main__":
    unittest.main()
