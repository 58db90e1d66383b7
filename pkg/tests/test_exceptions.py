"""Tests for exception hierarchy."""
import unittest

from semitoric_families.exceptions.degenerate_polygon_error import DegeneratePolygonError
from semitoric_families.exceptions.domain_error import DomainError
from semitoric_families.exceptions.inadmissible_error import InadmissibleError
from semitoric_families.exceptions.infeasible_error import InfeasibleError
from semitoric_families.exceptions.numerical_error import NumericalError
from semitoric_families.exceptions.semitoric_error import SemitoricError


class TestExceptionHierarchy(unittest.TestCase):

    def test_semitoric_error_is_exception(self):
        self.assertTrue(issubclass(SemitoricError, Exception))

    def test_domain_error_is_semitoric_error(self):
        self.assertTrue(issubclass(DomainError, SemitoricError))

    def test_degenerate_polygon_error_is_domain_error(self):
        self.assertTrue(issubclass(DegeneratePolygonError, DomainError))

    def test_infeasible_error_is_not_domain_error(self):
        self.assertTrue(issubclass(InfeasibleError, SemitoricError))
        self.assertFalse(issubclass(InfeasibleError, DomainError))

    def test_inadmissible_error_is_semitoric_error(self):
        self.assertTrue(issubclass(InadmissibleError, SemitoricError))
        self.assertFalse(issubclass(InadmissibleError, DomainError))

    def test_numerical_error_not_builtin_arithmetic_error(self):
        self.assertTrue(issubclass(NumericalError, SemitoricError))
        self.assertFalse(issubclass(NumericalError, ArithmeticError))

    def test_degenerate_polygon_error_caught_as_semitoric_error(self):
        with self.assertRaises(SemitoricError):
            raise DegeneratePolygonError("collinear")


class TestExceptionPayloads(unittest.TestCase):

    def test_infeasible_error_carries_obstruction(self):
        exc = InfeasibleError("simplex meets cut 0 at x=1")
        self.assertEqual(exc.obstruction, "simplex meets cut 0 at x=1")
        self.assertIsNone(exc.stage)
        self.assertEqual(str(exc), "simplex meets cut 0 at x=1")

    def test_infeasible_error_with_stage(self):
        exc = InfeasibleError("size too large", stage=2)
        self.assertEqual(exc.stage, 2)
        self.assertEqual(str(exc), "stage 2: size too large")

    def test_numerical_error_diagnostics_default_empty(self):
        self.assertEqual(NumericalError("no bracket").diagnostics, {})

    def test_numerical_error_keeps_diagnostics(self):
        exc = NumericalError("no bracket", {"samples": 201})
        self.assertEqual(exc.diagnostics["samples"], 201)

    def test_numerical_error_can_be_raised_and_caught(self):
        with self.assertRaises(NumericalError):
            raise NumericalError("test")


if __name__ == "__main__":
    unittest.main()
