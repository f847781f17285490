"""
Module: test_special
Description: Test cases for the gamma-family and zeta-family functions and the cached
constants built from them.
"""

import unittest
from fractions import Fraction

from barnes_g.exceptions import DomainError, Pole, PoleAtOne
from barnes_g.model import PrecisionContext
from barnes_g.special import (catalan, clausen_cl2, digamma, euler_gamma, glaisher_log, hurwitz_zeta,
                              hurwitz_zeta_prime_neg, hurwitz_zeta_prime_neg1, log_gamma,
                              log_gamma_reflection_residual, riemann_zeta, trigamma, zeta_minus_one,
                              zeta_minus_one_integral, zeta_prime_neg, zeta_prime_neg_functional,
                              zeta_prime_positive)

DIGITS = 25
TOLERANCE = 1e-22


class GammaFamilyTest(unittest.TestCase):
    """Tests log Gamma, digamma and trigamma."""

    def setUp(self):
        self.ctx = PrecisionContext(DIGITS)
        self.mp = self.ctx.mp

    def test_log_gamma_integer(self):
        """log Gamma(5) = log 24."""
        self.assertLess(abs(log_gamma(5, self.ctx).value - self.mp.log(24)), TOLERANCE)

    def test_log_gamma_half(self):
        """log Gamma(1/2) = log(pi)/2."""
        self.assertLess(abs(log_gamma(Fraction(1, 2), self.ctx).value - self.mp.log(self.mp.pi) / 2), TOLERANCE)

    def test_log_gamma_negative(self):
        """exp(log Gamma(-1/2)) = -2 sqrt(pi)."""
        value = self.mp.exp(log_gamma(Fraction(-1, 2), self.ctx).value)
        self.assertLess(abs(value + 2 * self.mp.sqrt(self.mp.pi)), TOLERANCE)

    def test_log_gamma_complex(self):
        """Principal branch at 2 + 3i."""
        z = self.mp.mpc(2, 3)
        self.assertLess(abs(log_gamma(z, self.ctx).value - self.mp.loggamma(z)), TOLERANCE)

    def test_log_gamma_pole(self):
        """Non-positive integers are poles."""
        with self.assertRaises(Pole):
            log_gamma(-2, self.ctx)

    def test_digamma(self):
        """psi(1) = -gamma, psi(1/2) = -gamma - 2 log 2, psi(-1/2) = psi(1/2) + 2."""
        mp = self.mp
        self.assertLess(abs(digamma(1, self.ctx).value + mp.euler), TOLERANCE)
        half = -mp.euler - 2 * mp.log(2)
        self.assertLess(abs(digamma(Fraction(1, 2), self.ctx).value - half), TOLERANCE)
        self.assertLess(abs(digamma(Fraction(-1, 2), self.ctx).value - half - 2), TOLERANCE)
        self.assertLess(abs(digamma(mp.mpc(1, 1), self.ctx).value - mp.digamma(mp.mpc(1, 1))), TOLERANCE)

    def test_digamma_pole(self):
        """psi has a pole at 0."""
        with self.assertRaises(Pole):
            digamma(0, self.ctx)

    def test_trigamma(self):
        """psi'(1) = pi**2/6, psi'(1/2) = pi**2/2."""
        mp = self.mp
        self.assertLess(abs(trigamma(1, self.ctx).value - mp.pi ** 2 / 6), TOLERANCE)
        self.assertLess(abs(trigamma(Fraction(1, 2), self.ctx).value - mp.pi ** 2 / 2), TOLERANCE)

    def test_reflection(self):
        """log Gamma(z) + log Gamma(1-z) = log(pi/sin(pi z))."""
        self.assertLess(log_gamma_reflection_residual(Fraction(1, 3), self.ctx), TOLERANCE)

    def test_euler_gamma(self):
        """The cached constant agrees with mpmath's."""
        self.assertLess(abs(euler_gamma(self.ctx) - self.mp.euler), TOLERANCE)


class ZetaFamilyTest(unittest.TestCase):
    """Tests the Hurwitz zeta function, its s-derivative and Riemann zeta values."""

    def setUp(self):
        self.ctx = PrecisionContext(DIGITS)
        self.mp = self.ctx.mp

    def test_hurwitz_values(self):
        """zeta(2, 1) = pi**2/6 and zeta(-1, 1/4) = -B_2(1/4)/2 = 1/96."""
        self.assertLess(abs(hurwitz_zeta(2, 1, self.ctx).value - self.mp.pi ** 2 / 6), TOLERANCE)
        self.assertLess(abs(hurwitz_zeta(-1, Fraction(1, 4), self.ctx).value - self.mp.mpf(1) / 96), TOLERANCE)

    def test_hurwitz_complex_argument(self):
        """zeta(3, 1 + i) against mpmath."""
        z = self.mp.mpc(1, 1)
        self.assertLess(abs(hurwitz_zeta(3, z, self.ctx).value - self.mp.zeta(3, z)), TOLERANCE)

    def test_hurwitz_errors(self):
        """s = 1 is a pole and Re z <= 0 is outside the Hermite integral."""
        with self.assertRaises(PoleAtOne):
            hurwitz_zeta(1, 2, self.ctx)
        with self.assertRaises(DomainError):
            hurwitz_zeta(2, -1, self.ctx)
        with self.assertRaises(PoleAtOne):
            riemann_zeta(1, self.ctx)

    def test_derivative_order_zero(self):
        """zeta'(0, z) = log Gamma(z) - log(2 pi)/2."""
        mp = self.mp
        z = mp.mpf(1) / 3
        expected = mp.loggamma(z) - mp.log(2 * mp.pi) / 2
        self.assertLess(abs(hurwitz_zeta_prime_neg(0, z, self.ctx).value - expected), TOLERANCE)

    def test_derivative_at_one(self):
        """zeta'(-1, 1) = zeta'(-1) = -0.16542114370045092921..."""
        value = hurwitz_zeta_prime_neg1(1, self.ctx).value
        self.assertLess(abs(value - self.mp.zeta(-1, 1, 1)), TOLERANCE)

    def test_derivative_half_argument(self):
        """zeta'(-1, 1/2) = -zeta'(-1)/2 - log(2)/24."""
        mp = self.mp
        expected = -mp.zeta(-1, 1, 1) / 2 - mp.log(2) / 24
        self.assertLess(abs(hurwitz_zeta_prime_neg1(Fraction(1, 2), self.ctx).value - expected), TOLERANCE)

    def test_derivative_shift_complex(self):
        """zeta'(-1, z+1) = zeta'(-1, z) + z log z at z = 1 + i."""
        mp = self.mp
        z = mp.mpc(1, 1)
        lhs = hurwitz_zeta_prime_neg1(z + 1, self.ctx).value
        rhs = hurwitz_zeta_prime_neg1(z, self.ctx).value + z * mp.log(z)
        self.assertLess(abs(lhs - rhs), TOLERANCE)

    def test_zeta_prime_at_negative_integers(self):
        """zeta'(-k) for k = 0..4 against mpmath."""
        for k in range(5):
            self.assertLess(abs(zeta_prime_neg(k, self.ctx) - self.mp.zeta(-k, 1, 1)), TOLERANCE)

    def test_functional_route(self):
        """The functional-equation route agrees with mpmath for k = 1, 3."""
        for k in (1, 3):
            self.assertLess(abs(zeta_prime_neg_functional(k, self.ctx) - self.mp.zeta(-k, 1, 1)), TOLERANCE)
        with self.assertRaises(ValueError):
            zeta_prime_neg_functional(2, self.ctx)

    def test_zeta_minus_one(self):
        """zeta(s) - 1 by series, Euler-Maclaurin and the integral form."""
        mp = self.mp
        for s in (2, 3, 51):
            self.assertLess(abs(zeta_minus_one(s, self.ctx).value - (mp.zeta(s) - 1)), TOLERANCE)
        self.assertLess(abs(zeta_minus_one_integral(3, self.ctx).value - (mp.zeta(3) - 1)), TOLERANCE)
        with self.assertRaises(DomainError):
            zeta_minus_one(1, self.ctx)

    def test_zeta_prime_positive(self):
        """zeta'(2) against mpmath."""
        self.assertLess(abs(zeta_prime_positive(2, self.ctx).value - self.mp.zeta(2, 1, 1)), TOLERANCE)


class ClausenTest(unittest.TestCase):
    """Tests Cl2 and the constants derived from it."""

    def setUp(self):
        self.ctx = PrecisionContext(DIGITS)
        self.mp = self.ctx.mp

    def test_against_mpmath(self):
        """Cl2(pi/3) and Cl2(1) against mpmath's clsin."""
        mp = self.mp
        for theta in (mp.pi / 3, mp.mpf(1)):
            self.assertLess(abs(clausen_cl2(theta, self.ctx).value - mp.clsin(2, theta)), TOLERANCE)

    def test_trigamma_identity(self):
        """Cl2(2 pi/3) = (psi'(1/3) - 2 pi**2/3)/(3 sqrt 3)."""
        mp = self.mp
        expected = (mp.psi(1, mp.mpf(1) / 3) - 2 * mp.pi ** 2 / 3) / (3 * mp.sqrt(3))
        self.assertLess(abs(clausen_cl2(2 * mp.pi / 3, self.ctx).value - expected), TOLERANCE)

    def test_symmetries(self):
        """Cl2 vanishes at 0 and pi, is odd and 2 pi periodic."""
        mp = self.mp
        self.assertEqual(0, clausen_cl2(0, self.ctx).value)
        self.assertEqual(0, clausen_cl2(mp.pi, self.ctx).value)
        value = clausen_cl2(mp.mpf(1), self.ctx).value
        self.assertLess(abs(clausen_cl2(-1, self.ctx).value + value), TOLERANCE)
        self.assertLess(abs(clausen_cl2(1 + 2 * mp.pi, self.ctx).value - value), TOLERANCE)

    def test_constants(self):
        """Catalan's constant and log A against mpmath."""
        mp = self.mp
        self.assertLess(abs(catalan(self.ctx) - mp.catalan), TOLERANCE)
        self.assertLess(abs(glaisher_log(self.ctx) - mp.log(mp.glaisher)), TOLERANCE)


if __name__ == '__main__':
    unittest.main()
