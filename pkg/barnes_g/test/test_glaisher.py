"""
Module: test_glaisher
Description: Test cases for the routes to the Glaisher-Kinkelin constant and the convergence
of the odd zeta series.
"""

import math
import unittest

from barnes_g.exceptions import DomainError
from barnes_g.glaisher import (fit_convergence_slope, glaisher_partial_sum, glaisher_series_error_curve,
                               glaisher_series_terms, log_glaisher)
from barnes_g.model import GlaisherMethod, PrecisionContext


class TermCountTest(unittest.TestCase):
    """Tests the number of odd zeta terms needed per digit count."""

    def test_term_counts(self):
        """ceil(p/2 log2 10) at 20, 30, 50 and 100 digits."""
        self.assertEqual([34, 50, 84, 167], [glaisher_series_terms(p) for p in (20, 30, 50, 100)])

    def test_term_count_reaches_precision(self):
        """The prescribed number of terms gives p correct digits."""
        for digits in (20, 30, 50):
            ctx = PrecisionContext(digits)
            mp = ctx.mp
            with self.subTest(digits=digits):
                value = glaisher_partial_sum(glaisher_series_terms(digits), ctx)
                self.assertLess(abs(value - mp.log(mp.glaisher)), mp.mpf(10) ** -digits)

    def test_partial_sum_needs_a_term(self):
        """Zero terms is rejected."""
        with self.assertRaises(ValueError):
            glaisher_partial_sum(0, PrecisionContext(20))


class RouteTest(unittest.TestCase):
    """Tests every route to log A."""

    def test_routes_agree_with_mpmath(self):
        """All four routes give 27 digits of log A at 30 requested."""
        ctx = PrecisionContext(30)
        mp = ctx.mp
        for method in GlaisherMethod:
            with self.subTest(method=method.value):
                result = log_glaisher(method, ctx)
                self.assertLess(abs(result.value - mp.log(mp.glaisher)), 1e-27)
                self.assertEqual(method.value, result.method)

    def test_routes_agree_at_forty_digits(self):
        """All four routes agree with each other and with mpmath to 1e-37 at 40 digits."""
        ctx = PrecisionContext(40)
        mp = ctx.mp
        values = {method.value: log_glaisher(method, ctx).value for method in GlaisherMethod}
        reference = values[GlaisherMethod.ODD_ZETA_SERIES.value]
        self.assertLess(abs(reference - mp.log(mp.glaisher)), 1e-37)
        for tag, value in values.items():
            with self.subTest(method=tag):
                self.assertLess(abs(value - reference), 1e-37)

    def test_series_reports_term_count(self):
        """The odd zeta route counts its terms as evaluations."""
        result = log_glaisher(GlaisherMethod.ODD_ZETA_SERIES, PrecisionContext(30))
        self.assertEqual(50, result.evaluations)
        self.assertTrue(result.succeeded(30))


class ConvergenceTest(unittest.TestCase):
    """Tests the geometric convergence of the odd zeta series."""

    def test_slope(self):
        """The fitted log10 error falls by log10 4 per term."""
        curve = glaisher_series_error_curve(40, PrecisionContext(30))
        self.assertEqual(40, len(curve))
        self.assertLess(abs(fit_convergence_slope(curve[4:]) + math.log10(4)), 0.05)

    def test_errors_decrease(self):
        """Each extra term improves the partial sum."""
        curve = glaisher_series_error_curve(20, PrecisionContext(20))
        errors = [err for _, err in curve]
        self.assertTrue(all(b < a for a, b in zip(errors, errors[1:])))

    def test_short_curve(self):
        """Fewer than four points cannot be fitted."""
        with self.assertRaises(DomainError):
            glaisher_series_error_curve(3, PrecisionContext(20))


if __name__ == '__main__':
    unittest.main()
