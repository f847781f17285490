"""
Memoized constants: exact Bernoulli numbers and high-precision values such as the
Euler-Mascheroni constant, log 2pi, zeta'(0), zeta'(-k), log A and Catalan's constant.
"""
import logging
import threading
from fractions import Fraction
from typing import Callable, Dict, Tuple

import mpmath

from barnes_g.model import PrecisionContext


class ConstantsCache:
    """
    Read-mostly store of constants. Each value is kept at the highest precision ever
    requested and rounded on lower-precision reads. Fills are exclusive; a value
    computing another cached value re-enters the same lock.
    """

    def __init__(self):
        self._lock = threading.RLock()
        self._values: Dict[str, Tuple[int, object]] = {}
        self._bernoulli: Dict[int, Fraction] = {}

    def get(self, name: str, ctx: PrecisionContext, compute: Callable[[PrecisionContext], object]):
        """
        The constant `name` at the working precision of `ctx`, computing it with
        `compute(ctx)` when the stored copy is missing or less precise.
        """
        stored = self._values.get(name)
        if stored is None or stored[0] < ctx.working_digits:
            with self._lock:
                stored = self._values.get(name)
                if stored is None or stored[0] < ctx.working_digits:
                    logging.debug("Computing constant %s at %s digits", name, ctx.working_digits)
                    stored = (ctx.working_digits, compute(ctx))
                    self._values[name] = stored
        return +ctx.mp.convert(stored[1])

    def bernoulli(self, n: int) -> Fraction:
        """Exact B_n with B_1 = -1/2."""
        value = self._bernoulli.get(n)
        if value is None:
            numerator, denominator = mpmath.bernfrac(n)
            value = Fraction(int(numerator), int(denominator))
            with self._lock:
                self._bernoulli[n] = value
        return value

    def stored_digits(self, name: str) -> int:
        """Precision of the stored copy of `name`, 0 if absent."""
        stored = self._values.get(name)
        return stored[0] if stored else 0

    def clear(self):
        """Forget every memoized value."""
        with self._lock:
            self._values.clear()
            self._bernoulli.clear()


CONSTANTS = ConstantsCache()
