"""
Exact combinatorial objects: Bernoulli numbers and polynomials, harmonic numbers,
Stirling subset numbers, Bell numbers, the Bell-number Hankel determinant and
double factorials.
"""
import functools
from fractions import Fraction
from math import comb
from typing import List, Tuple

from barnes_g.constants import CONSTANTS
from barnes_g.model import PrecisionContext


def bernoulli_number(n: int) -> Fraction:
    """
    Exact Bernoulli number B_n with the convention B_1 = -1/2.
    :param n: non-negative index
    :return: B_n as a reduced fraction
    """
    if n < 0:
        raise ValueError(f"Bernoulli index must be non-negative, got {n}")
    return CONSTANTS.bernoulli(n)


def bernoulli_poly(n: int, z, ctx: PrecisionContext):
    """
    Bernoulli polynomial B_n(z) = sum_k C(n, k) B_k z**(n-k) at working precision.
    """
    if n < 0:
        raise ValueError(f"Bernoulli polynomial degree must be non-negative, got {n}")
    mp = ctx.mp
    z = mp.convert(z)
    total = mp.zero
    for k in range(n + 1):
        b_k = bernoulli_number(k)
        if b_k:
            total += comb(n, k) * mp.mpf(b_k.numerator) / b_k.denominator * z ** (n - k)
    return total


@functools.lru_cache(maxsize=None)
def harmonic(p: int) -> Fraction:
    """
    Exact harmonic number H_p = 1 + 1/2 + ... + 1/p.
    """
    if p < 1:
        raise ValueError(f"harmonic index must be positive, got {p}")
    if p == 1:
        return Fraction(1)
    return harmonic(p - 1) + Fraction(1, p)


@functools.lru_cache(maxsize=None)
def _stirling_row(n: int) -> Tuple[int, ...]:
    """Row n of the Stirling subset triangle, entries k = 0..n."""
    row = (1,)
    for m in range(1, n + 1):
        # {m,k} = k {m-1,k} + {m-1,k-1}, {m,0} = [m = 0]
        row = tuple((k * row[k] if k < m else 0) + (row[k - 1] if k >= 1 else 0)
                    for k in range(m + 1))
    return row


def stirling_subset(n: int, k: int) -> int:
    """
    Stirling subset number {n, k}: partitions of an n-set into k non-empty blocks.
    """
    if n < 0 or k < 0:
        raise ValueError(f"Stirling indices must be non-negative, got ({n}, {k})")
    if k > n:
        return 0
    return _stirling_row(n)[k]


def bell_number(n: int) -> int:
    """
    Bell number B_n as the sum of row n of the Stirling subset triangle.
    """
    if n < 0:
        raise ValueError(f"Bell index must be non-negative, got {n}")
    return sum(_stirling_row(n))


def hankel_bell_matrix(n: int) -> List[List[int]]:
    """The n x n Hankel matrix with entries B_{i+j-1}, i, j = 1..n."""
    return [[bell_number(i + j + 1) for j in range(n)] for i in range(n)]


def hankel_bell_det(n: int) -> int:
    """
    Determinant of the Bell-number Hankel matrix by fraction-free (Bareiss) elimination.
    :param n: matrix order, at least 1
    :return: the exact integer determinant
    """
    if n < 1:
        raise ValueError(f"matrix order must be positive, got {n}")
    mat = hankel_bell_matrix(n)
    sign = 1
    prev_pivot = 1
    for k in range(n - 1):
        pivot_row = k
        while mat[pivot_row][k] == 0:
            pivot_row += 1
            if pivot_row == n:
                return 0
        if pivot_row != k:
            mat[pivot_row], mat[k] = mat[k], mat[pivot_row]
            sign = -sign
        pivot = mat[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact: Sylvester's identity guarantees divisibility
                mat[i][j] = (pivot * mat[i][j] - mat[i][k] * mat[k][j]) // prev_pivot
            mat[i][k] = 0
        prev_pivot = pivot
    return sign * mat[n - 1][n - 1]


def double_factorial(n: int) -> int:
    """
    n!! with (-1)!! = 0!! = 1.
    """
    if n < -1:
        raise ValueError(f"double factorial is defined for n >= -1, got {n}")
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


def superfactorial(n: int) -> int:
    """prod_{i=1}^{n-1} i!, the value G(n+1)."""
    result = 1
    factorial = 1
    for i in range(1, n):
        factorial *= i
        result *= factorial
    return result
