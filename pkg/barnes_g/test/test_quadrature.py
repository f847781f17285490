"""
Module: test_quadrature
Description: Test cases for tanh-sinh and Gauss-Legendre quadrature, tail-bounded series
and Euler-Maclaurin tails.
"""

import math
import unittest

from barnes_g.exceptions import NonConvergence
from barnes_g.model import PrecisionContext
from barnes_g.quadrature import (breakpoints, euler_maclaurin_tail, integrate_path, integrate_semi_infinite,
                                 sum_series, tanh_sinh_nodes, truncation_point)
from barnes_g.special import bose_kernel


class TanhSinhTest(unittest.TestCase):
    """Tests semi-infinite tanh-sinh quadrature."""

    def setUp(self):
        self.ctx = PrecisionContext(25)
        self.mp = self.ctx.mp

    def test_centre_node(self):
        """The t = 0 node sits at the centre with weight pi/2."""
        d, w = tanh_sinh_nodes(self.ctx.working_digits, 0)[0]
        self.assertEqual(1, d)
        self.assertLess(abs(w - self.mp.pi / 2), 1e-40)

    def test_exponential(self):
        """int_0^inf exp(-x) dx = 1."""
        result = integrate_semi_infinite(lambda x: self.mp.exp(-x), 1.0, self.ctx)
        self.assertLess(abs(result.value - 1), 1e-25)
        self.assertEqual("tanh-sinh", result.method)
        self.assertGreater(result.evaluations, 0)

    def test_bose_moment(self):
        """int_0^inf x/(exp(2 pi x) - 1) dx = 1/24."""
        result = integrate_semi_infinite(lambda x: x * bose_kernel(self.mp, x), 2 * math.pi, self.ctx, growth=1)
        self.assertLess(abs(result.value - self.mp.mpf(1) / 24), 1e-25)
        self.assertTrue(result.succeeded(25))

    def test_log_endpoint_singularity(self):
        """int_0^inf log(x) exp(-x) dx = -gamma."""
        result = integrate_semi_infinite(lambda x: self.mp.log(x) * self.mp.exp(-x), 1.0, self.ctx)
        self.assertLess(abs(result.value + self.mp.euler), 1e-24)

    def test_truncation_moves_out_with_growth(self):
        """Polynomial growth pushes the cut-off outwards."""
        self.assertGreater(truncation_point(1.0, self.ctx, growth=4), truncation_point(1.0, self.ctx))

    def test_breakpoints_cover_the_range(self):
        """Breakpoints start at zero, increase and reach the cut-off."""
        points = breakpoints(20.0, 1.0, 0.25)
        self.assertEqual(0.0, points[0])
        self.assertGreaterEqual(points[-1], 20.0)
        self.assertTrue(all(a < b for a, b in zip(points, points[1:])))


class PathTest(unittest.TestCase):
    """Tests Gauss-Legendre quadrature along polygonal paths."""

    def test_logarithm_around_origin(self):
        """int 1/x from 1 to i through 1 + i is i pi/2."""
        ctx = PrecisionContext(25)
        mp = ctx.mp
        result = integrate_path(lambda x: 1 / x, [1, mp.mpc(1, 1), mp.mpc(0, 1)], ctx)
        self.assertLess(abs(result.value - mp.mpc(0, 1) * mp.pi / 2), 1e-25)
        self.assertEqual("gauss-legendre", result.method)

    def test_degenerate_path(self):
        """A path with no length integrates to zero."""
        ctx = PrecisionContext(20)
        result = integrate_path(lambda x: x, [2, 2], ctx)
        self.assertEqual(0, result.value)


class ErrorHonestyTest(unittest.TestCase):
    """Reported error bounds against a rerun with 20 more digits."""

    CORPUS = {
        "exp": (lambda mp: lambda x: mp.exp(-x), 1.0, 0.0),
        "bose-moment": (lambda mp: lambda x: x * bose_kernel(mp, x), 2 * math.pi, 1.0),
        "square-exp": (lambda mp: lambda x: x * x * mp.exp(-x), 1.0, 2.0),
        "atan-bose": (lambda mp: lambda x: mp.atan(x / 3) * bose_kernel(mp, x), 2 * math.pi, 0.0),
    }

    def assert_honest(self, compute, digits: int):
        """`compute(ctx)` at `digits` is within its reported error of the rerun at digits + 20."""
        low, high = PrecisionContext(digits), PrecisionContext(digits + 20)
        result = compute(low)
        reference = compute(high).value
        actual = abs(high.mp.convert(result.value) - reference)
        self.assertLessEqual(actual, high.mp.mpf(10) ** result.err_log10)

    def test_semi_infinite_corpus(self):
        """tanh-sinh error bounds at 20 and 30 digits."""
        for name, (factory, decay, growth) in self.CORPUS.items():
            for digits in (20, 30):
                with self.subTest(integrand=name, digits=digits):
                    self.assert_honest(lambda ctx, factory=factory, decay=decay, growth=growth:
                                       integrate_semi_infinite(factory(ctx.mp), decay, ctx, growth=growth), digits)

    def test_path_corpus(self):
        """Gauss-Legendre error bounds along a bent path and a straight one."""
        def around_origin(ctx):
            mp = ctx.mp
            return integrate_path(lambda x: 1 / x, [1, mp.mpc(1, 1), mp.mpc(0, 1)], ctx)

        def straight(ctx):
            mp = ctx.mp
            return integrate_path(lambda x: mp.exp(x) * mp.cos(x), [0, mp.mpc(2, 1)], ctx)

        for compute in (around_origin, straight):
            for digits in (20, 30):
                with self.subTest(path=compute.__name__, digits=digits):
                    self.assert_honest(compute, digits)


class SeriesTest(unittest.TestCase):
    """Tests tail-bounded series and Euler-Maclaurin tails."""

    def test_geometric(self):
        """sum 2**-k = 1 with the exact tail as bound."""
        ctx = PrecisionContext(20)
        mp = ctx.mp
        result = sum_series(lambda k: mp.mpf(2) ** -k, lambda n: mp.mpf(2) ** -n, ctx)
        self.assertLess(abs(result.value - 1), 1e-25)
        self.assertEqual("series", result.method)

    def test_stops_below_target(self):
        """The sum stops once the tail bound is under 10**-(digits + guard//2)."""
        ctx = PrecisionContext(30)
        mp = ctx.mp
        self.assertEqual(-(30 + ctx.guard // 2), ctx.target_log10)
        result = sum_series(lambda k: mp.mpf(3) ** -k, lambda n: mp.mpf(3) ** -n / 2, ctx)
        self.assertLessEqual(result.err_log10, ctx.target_log10)

    def test_inverse_squares_with_tail_estimate(self):
        """sum 1/k**2 with the tail 1/N - 1/(2N**2) + 1/(6N**3), bounded by 1/(30 N**5)."""
        ctx = PrecisionContext(12)
        mp = ctx.mp

        def tail_estimate(n):
            n = mp.mpf(n)
            return 1 / n - 1 / (2 * n ** 2) + 1 / (6 * n ** 3)

        result = sum_series(lambda k: 1 / mp.mpf(k) ** 2, lambda n: 1 / (30 * mp.mpf(n) ** 5), ctx,
                            tail_estimate=tail_estimate)
        self.assertLess(abs(result.value - mp.pi ** 2 / 6), 1e-12)

    def test_term_cap(self):
        """The harmonic series never meets its tail bound."""
        ctx = PrecisionContext(20)
        with self.assertRaises(NonConvergence):
            sum_series(lambda k: ctx.mp.mpf(1) / k, lambda n: ctx.mp.mpf(1) / n, ctx, cap=100)

    def test_power_tail(self):
        """sum_{j >= 30} j**-2 = pi**2/6 - sum_{j < 30} j**-2."""
        ctx = PrecisionContext(20)
        mp = ctx.mp
        tail, _ = euler_maclaurin_tail(2, 0, 30, ctx)
        expected = mp.pi ** 2 / 6 - mp.fsum(mp.mpf(j) ** -2 for j in range(1, 30))
        self.assertLess(abs(tail - expected), 1e-30)

    def test_log_power_tail(self):
        """sum_{j >= 30} log j / j**2 = -zeta'(2) - sum_{j < 30} log j / j**2."""
        ctx = PrecisionContext(20)
        mp = ctx.mp
        tail, _ = euler_maclaurin_tail(2, 1, 30, ctx)
        expected = -mp.zeta(2, 1, 1) - mp.fsum(mp.log(j) / mp.mpf(j) ** 2 for j in range(2, 30))
        self.assertLess(abs(tail - expected), 1e-30)

    def test_log_power_range(self):
        """Only log powers 0 and 1 are supported."""
        with self.assertRaises(ValueError):
            euler_maclaurin_tail(2, 2, 30, PrecisionContext(20))


if __name__ == '__main__':
    unittest.main()
