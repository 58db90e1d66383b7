"""Tests for Williamson types, transition times and region diagrams."""
from math import sqrt
import unittest

import numpy as np

from semitoric_families.charts import symplectic_matrix
from semitoric_families.enums.chart_id_enum import ChartIdEnum
from semitoric_families.enums.morse_type_enum import MorseTypeEnum
from semitoric_families.enums.rank_one_type_enum import RankOneTypeEnum
from semitoric_families.enums.system_id_enum import SystemIdEnum
from semitoric_families.enums.williamson_type_enum import WilliamsonTypeEnum
from semitoric_families.exceptions.domain_error import DomainError
from semitoric_families.exceptions.numerical_error import NumericalError
from semitoric_families.model_systems import build_family
from semitoric_families.models.chart_point_model import ChartPointModel
from semitoric_families.models.fixed_point_model import FixedPointModel
from semitoric_families.models.hessian_bundle_model import HessianBundleModel
from semitoric_families.models.reduced_char_poly_model import ReducedCharPolyModel
from semitoric_families.models.reduced_critical_point_model import ReducedCriticalPointModel
from semitoric_families.spectral_classification import (
    classify,
    classify_fixed_point,
    classify_inventory,
    classify_rank_one,
    eigenvalue_trajectory,
    hamiltonian_hopf_pattern,
    hessian_bundle,
    reduced_char_poly,
    region_diagram,
    transition_times,
    verdict_from_roots,
    verdict_sweep,
)
from semitoric_families.utils.constants import EVEN_POLYNOMIAL_TOLERANCE

EE = WilliamsonTypeEnum.ELLIPTIC_ELLIPTIC
FF = WilliamsonTypeEnum.FOCUS_FOCUS
EH = WilliamsonTypeEnum.ELLIPTIC_HYPERBOLIC
HH = WilliamsonTypeEnum.HYPERBOLIC_HYPERBOLIC


def bundle(d2j, d2h) -> HessianBundleModel:
    """Hessian bundle in Darboux coordinates (q1, p1, q2, p2)"""
    return HessianBundleModel(
        label="P",
        chart=ChartIdEnum.U14,
        times=(0.5,),
        d2j=np.array(d2j, dtype=float),
        d2h=np.array(d2h, dtype=float),
        omega=symplectic_matrix(ChartIdEnum.U14),
        step=1e-3,
        levels=1,
        residual=0.0,
    )


def focus_focus_bundle() -> HessianBundleModel:
    # J = q1 p2 - q2 p1, H = q1 p1 + q2 p2
    d2j = np.zeros((4, 4))
    d2j[0, 3] = d2j[3, 0] = 1.0
    d2j[1, 2] = d2j[2, 1] = -1.0
    d2h = np.zeros((4, 4))
    d2h[0, 1] = d2h[1, 0] = 1.0
    d2h[2, 3] = d2h[3, 2] = 1.0
    return bundle(d2j, d2h)


def char_poly(c2: float, c4: float) -> ReducedCharPolyModel:
    return ReducedCharPolyModel(nu=0.0, mu=1.0, c2=c2, c4=c4, odd_residual=0.0, scale=1.0)


class TestVerdictFromRoots(unittest.TestCase):

    def test_root_signs(self):
        self.assertEqual(verdict_from_roots(char_poly(5.0, 4.0), 1e-7), EE)
        self.assertEqual(verdict_from_roots(char_poly(-2.0, -3.0), 1e-7), EH)
        self.assertEqual(verdict_from_roots(char_poly(-5.0, 4.0), 1e-7), HH)
        self.assertEqual(verdict_from_roots(char_poly(0.0, 4.0), 1e-7), FF)

    def test_repeated_root_has_no_verdict(self):
        self.assertIsNone(verdict_from_roots(char_poly(2.0, 1.0), 1e-7))

    def test_zero_root_has_no_verdict(self):
        self.assertIsNone(verdict_from_roots(char_poly(3.0, 0.0), 1e-7))

    def test_zero_scale(self):
        cp = ReducedCharPolyModel(nu=0.0, mu=1.0, c2=0.0, c4=0.0, odd_residual=0.0, scale=0.0)
        self.assertIsNone(verdict_from_roots(cp, 1e-7))


class TestReducedCharPoly(unittest.TestCase):

    def test_two_oscillators(self):
        cp = reduced_char_poly(bundle(np.diag([1, 1, 2, 2]), np.zeros((4, 4))), 1.0, 0.0)
        # (X^2 + 1)(X^2 + 4)
        self.assertAlmostEqual(cp.c2, 5.0)
        self.assertAlmostEqual(cp.c4, 4.0)
        self.assertLess(cp.odd_residual, 1e-12)

    def test_fixed_point_polynomial_is_even(self):
        hb = hessian_bundle(build_family(SystemIdEnum.COUPLED_ANGULAR), 0.3, "NS")
        rng = np.random.default_rng(7)
        for nu, mu in rng.normal(size=(10, 2)):
            self.assertLess(reduced_char_poly(hb, float(nu), float(mu)).odd_residual, EVEN_POLYNOMIAL_TOLERANCE)


class TestClassifyFixedPoint(unittest.TestCase):

    def test_elliptic_elliptic(self):
        verdict = classify_fixed_point(bundle(np.diag([1, 1, 2, 2]), np.diag([1, 1, -1, -1])), special=[(1.0, 0.0)])
        self.assertEqual(verdict.williamson_type, EE)
        self.assertEqual(verdict.witness, (1.0, 0.0))
        self.assertTrue(verdict.consistent)

    def test_elliptic_hyperbolic(self):
        d2 = np.zeros((4, 4))
        d2[0, 1] = d2[1, 0] = 1.0
        d2[2, 2] = d2[3, 3] = 1.0
        self.assertEqual(classify_fixed_point(bundle(d2, d2)).williamson_type, EH)

    def test_focus_focus_needs_a_combination(self):
        verdict = classify_fixed_point(focus_focus_bundle(), special=[(1.0, 0.0), (0.0, 1.0), (1.0, 1.0)])
        self.assertEqual(verdict.williamson_type, FF)
        self.assertEqual(verdict.witness, (1.0, 1.0))

    def test_vanishing_hessians_are_structurally_degenerate(self):
        verdict = classify_fixed_point(bundle(np.zeros((4, 4)), np.zeros((4, 4))))
        self.assertEqual(verdict.williamson_type, WilliamsonTypeEnum.DEGENERATE)
        self.assertTrue(verdict.structural)


class TestFamilyVerdicts(unittest.TestCase):

    def test_w1_transition_point(self):
        family = build_family(SystemIdEnum.W1_MOVING_AB)
        types = [v.williamson_type for v in verdict_sweep(family, "C", [0.2, 0.6, 0.95])]
        self.assertEqual(types, [EE, FF, EE])

    def test_w2_origins_at_half(self):
        family = build_family(SystemIdEnum.W2_TWO_PARAM)
        types = [classify(family, (0.5, 0.5), label).williamson_type for label in "ABCD"]
        self.assertEqual(types, [EE, FF, FF, EE])

    def test_coupled_inventory_at_half(self):
        verdicts = {v.label: v.williamson_type for v in classify_inventory(build_family(SystemIdEnum.COUPLED_ANGULAR), 0.5)}
        self.assertEqual(set(verdicts), {"NN", "NS", "SN", "SS"})
        self.assertEqual(verdicts["NS"], FF)

    def test_non_fixed_point_rejected(self):
        point = FixedPointModel("X", ChartPointModel(ChartIdEnum.U14, [0.5, 0.0, 0.5, 0.0]), 0.0, 0.0, 0.0)
        with self.assertRaises(DomainError):
            hessian_bundle(build_family(SystemIdEnum.W1_MOVING_AB), 0.3, point)


class TestTransitionTimes(unittest.TestCase):

    def test_coupled_angular(self):
        result = transition_times(build_family(SystemIdEnum.COUPLED_ANGULAR))
        self.assertEqual(result.method, "closed-form")
        self.assertAlmostEqual(result.t_minus, 2 / (5 + 2 * sqrt(2)))
        self.assertAlmostEqual(result.t_plus, 2 / (5 - 2 * sqrt(2)))
        self.assertLess(result.gap, 1e-8)

    def test_w1_moving(self):
        t_minus, t_plus = transition_times(build_family(SystemIdEnum.W1_MOVING_AB)).bisection
        self.assertAlmostEqual(t_minus, 10 / 29, places=6)
        self.assertAlmostEqual(t_plus, 10 / 11, places=6)

    def test_w1_switch(self):
        t_minus, t_plus = transition_times(build_family(SystemIdEnum.W1_SWITCH, alpha=1.0, beta=3.0)).bisection
        self.assertAlmostEqual(t_minus, 4 / 11, places=6)
        self.assertAlmostEqual(t_plus, 4 / 5, places=6)

    def test_w2_trans_b(self):
        with self.assertLogs("semitoric_families.spectral_classification", level="INFO"):
            result = transition_times(build_family(SystemIdEnum.W2_TRANS_B))
        self.assertAlmostEqual(result.bisection[0], 3 / 4.9, places=6)
        self.assertAlmostEqual(result.bisection[1], 3 / 3.1, places=6)

    def test_two_parameter_family_rejected(self):
        with self.assertRaises(DomainError):
            transition_times(build_family(SystemIdEnum.W2_TWO_PARAM))

    def test_missed_window(self):
        # the focus-focus window has width about 0.002 and falls between grid points
        family = build_family(SystemIdEnum.W1_MOVING_AB, gamma=0.001)
        with self.assertRaises(NumericalError) as ctx:
            transition_times(family, samples=10)
        self.assertEqual(ctx.exception.diagnostics["samples"], 10)


class TestSpectrumAroundTransition(unittest.TestCase):

    def setUp(self):
        self.family = build_family(SystemIdEnum.W1_MOVING_AB)

    def test_hamiltonian_hopf_entering_focus_focus(self):
        self.assertEqual(
            hamiltonian_hopf_pattern(self.family, "C", 10 / 29),
            {"before": True, "after": True, "leaving_focus_focus": False},
        )

    def test_hamiltonian_hopf_leaving_focus_focus(self):
        self.assertEqual(
            hamiltonian_hopf_pattern(self.family, "C", 10 / 11),
            {"before": True, "after": True, "leaving_focus_focus": True},
        )

    def test_hamiltonian_hopf_away_from_transition(self):
        # both sides elliptic-elliptic, so the focus-focus side is missing
        result = hamiltonian_hopf_pattern(self.family, "C", 0.25)
        self.assertFalse(result["leaving_focus_focus"])
        self.assertTrue(result["before"])
        self.assertFalse(result["after"])

    def test_eigenvalue_trajectory(self):
        trajectory = eigenvalue_trajectory(self.family, "C", [0.2, 0.6])
        self.assertEqual(len(trajectory), 2)
        self.assertTrue(np.all(np.abs(trajectory[0].real) < 1e-6))
        self.assertTrue(np.all(np.abs(trajectory[1].real) > 1e-6))


class TestClassifyRankOne(unittest.TestCase):

    def test_reduced_point_carries_morse_type(self):
        point = ReducedCriticalPointModel(rho=1.0, theta=0.0, morse_type=MorseTypeEnum.HYPERBOLIC, residual=0.0)
        family = build_family(SystemIdEnum.W1_MOVING_AB)
        self.assertEqual(classify_rank_one(family, 0.3, 1.0, point), RankOneTypeEnum.HYPERBOLIC_TRANSVERSE)

    def test_point_of_the_fixed_sphere(self):
        family = build_family(SystemIdEnum.W1_MOVING_AB)
        point = ChartPointModel(ChartIdEnum.U14, [0.0, 0.0, 0.5, 0.0])
        self.assertEqual(classify_rank_one(family, 0.3, 0.0, point), RankOneTypeEnum.ELLIPTIC_TRANSVERSE)

    def test_point_off_the_level(self):
        family = build_family(SystemIdEnum.W1_MOVING_AB)
        point = ChartPointModel(ChartIdEnum.U14, [0.0, 0.0, 0.5, 0.0])
        with self.assertRaises(DomainError):
            classify_rank_one(family, 0.3, 1.0, point)


class TestRegionDiagram(unittest.TestCase):

    def test_four_open_regions(self):
        diagram = region_diagram(build_family(SystemIdEnum.W2_TWO_PARAM), grid=21)
        self.assertEqual(set(diagram.region_counts), {"EE/EE", "FF/EE", "EE/FF", "FF/FF"})
        self.assertEqual(diagram.open_region_count, 4)
        self.assertEqual(diagram.pair(10, 10), "FF/FF")
        self.assertEqual(len(diagram.csv_rows()), 21 * 21)

    def test_one_parameter_family_rejected(self):
        with self.assertRaises(DomainError):
            region_diagram(build_family(SystemIdEnum.W2_TRANS_B), grid=3)


if __name__ == "__main__":
    unittest.main()
