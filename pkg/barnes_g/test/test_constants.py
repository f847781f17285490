"""
Module: test_constants
Description: Test cases for the memoized constants store.
"""

import unittest
from fractions import Fraction

from barnes_g.constants import ConstantsCache
from barnes_g.model import PrecisionContext


class ConstantsCacheTest(unittest.TestCase):
    """Tests precision upgrades, rounding on lower-precision reads and clearing."""

    def setUp(self):
        self.cache = ConstantsCache()
        self.calls = []

    def compute_pi(self, ctx):
        """pi at the working precision, recording each call."""
        self.calls.append(ctx.working_digits)
        return ctx.mp.pi

    def test_computed_once_per_precision(self):
        """A second read at the same precision is served from the store."""
        ctx = PrecisionContext(20)
        first = self.cache.get("pi", ctx, self.compute_pi)
        second = self.cache.get("pi", ctx, self.compute_pi)
        self.assertEqual(first, second)
        self.assertEqual([ctx.working_digits], self.calls)
        self.assertEqual(ctx.working_digits, self.cache.stored_digits("pi"))

    def test_keeps_highest_precision(self):
        """A higher request recomputes; a later lower request is rounded from it."""
        low, high = PrecisionContext(20), PrecisionContext(60)
        self.cache.get("pi", low, self.compute_pi)
        self.cache.get("pi", high, self.compute_pi)
        value = self.cache.get("pi", low, self.compute_pi)
        self.assertEqual(2, len(self.calls))
        self.assertEqual(high.working_digits, self.cache.stored_digits("pi"))
        self.assertEqual(low.mp.pi, value)

    def test_bernoulli(self):
        """Exact Bernoulli numbers with B_1 = -1/2."""
        self.assertEqual(Fraction(-1, 2), self.cache.bernoulli(1))
        self.assertEqual(Fraction(5, 66), self.cache.bernoulli(10))

    def test_clear(self):
        """clear() forgets every stored value."""
        self.cache.get("pi", PrecisionContext(20), self.compute_pi)
        self.cache.clear()
        self.assertEqual(0, self.cache.stored_digits("pi"))


if __name__ == '__main__':
    unittest.main()
