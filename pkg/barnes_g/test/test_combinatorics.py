"""
Module: test_combinatorics
Description: Test cases for the exact Bernoulli, Stirling, Bell and Hankel helpers.
"""

import unittest
from fractions import Fraction

from barnes_g.combinatorics import (bell_number, bernoulli_number, bernoulli_poly, double_factorial,
                                    hankel_bell_det, hankel_bell_matrix, harmonic, stirling_subset,
                                    superfactorial)
from barnes_g.model import PrecisionContext


class BernoulliTest(unittest.TestCase):
    """Tests exact Bernoulli numbers and polynomials."""

    def test_first_values(self):
        """B_0..B_4 and B_12 match the classical table, with B_1 = -1/2."""
        self.assertEqual(Fraction(1), bernoulli_number(0))
        self.assertEqual(Fraction(-1, 2), bernoulli_number(1))
        self.assertEqual(Fraction(1, 6), bernoulli_number(2))
        self.assertEqual(Fraction(-1, 30), bernoulli_number(4))
        self.assertEqual(Fraction(-691, 2730), bernoulli_number(12))

    def test_odd_indices_vanish(self):
        """B_n = 0 for odd n > 1."""
        for n in range(3, 40, 2):
            self.assertEqual(0, bernoulli_number(n))

    def test_negative_index(self):
        """Negative indices are rejected."""
        with self.assertRaises(ValueError):
            bernoulli_number(-1)

    def test_polynomial_at_quarter(self):
        """B_2(1/4) = 1/16 - 1/4 + 1/6 = -1/48."""
        ctx = PrecisionContext(20)
        value = bernoulli_poly(2, ctx.mp.mpf(1) / 4, ctx)
        self.assertLess(abs(value + ctx.mp.mpf(1) / 48), 1e-30)


class CountingTest(unittest.TestCase):
    """Tests harmonic, Stirling subset, Bell numbers and double factorials."""

    def test_harmonic(self):
        """H_1 = 1, H_3 = 11/6."""
        self.assertEqual(Fraction(1), harmonic(1))
        self.assertEqual(Fraction(11, 6), harmonic(3))
        with self.assertRaises(ValueError):
            harmonic(0)

    def test_stirling_subset(self):
        """Edge values and {5,2} = 15, {6,3} = 90."""
        self.assertEqual(1, stirling_subset(0, 0))
        self.assertEqual(0, stirling_subset(4, 0))
        self.assertEqual(0, stirling_subset(3, 5))
        self.assertEqual(15, stirling_subset(5, 2))
        self.assertEqual(90, stirling_subset(6, 3))

    def test_bell_numbers(self):
        """Bell numbers B_0..B_8."""
        self.assertEqual([1, 1, 2, 5, 15, 52, 203, 877, 4140], [bell_number(n) for n in range(9)])

    def test_double_factorial(self):
        """(-1)!! = 0!! = 1, 5!! = 15, 6!! = 48."""
        self.assertEqual(1, double_factorial(-1))
        self.assertEqual(1, double_factorial(0))
        self.assertEqual(15, double_factorial(5))
        self.assertEqual(48, double_factorial(6))
        with self.assertRaises(ValueError):
            double_factorial(-2)


class HankelBellTest(unittest.TestCase):
    """Tests the Bell-number Hankel determinant against the superfactorial."""

    def test_matrix_entries(self):
        """The 3 x 3 matrix holds B_1..B_5."""
        self.assertEqual([[1, 2, 5], [2, 5, 15], [5, 15, 52]], hankel_bell_matrix(3))

    def test_superfactorial(self):
        """G(n+1) for n = 0..6."""
        self.assertEqual([1, 1, 1, 2, 12, 288, 34560], [superfactorial(n) for n in range(7)])

    def test_determinant_is_superfactorial(self):
        """det M_n = G(n+1) exactly for n <= 8."""
        for n in range(1, 9):
            self.assertEqual(superfactorial(n), hankel_bell_det(n))

    def test_order_must_be_positive(self):
        """An empty matrix is rejected."""
        with self.assertRaises(ValueError):
            hankel_bell_det(0)


if __name__ == '__main__':
    unittest.main()
