"""
Multiple gamma functions Gamma_n: the integral representations of log Gamma_n(z+1) solved
order by order, the Hurwitz-sum form used as a cross-check, the triple gamma Hermite
form and its large-z expansion, and the closed form at z = 1/2.
"""
import logging
import math
from fractions import Fraction
from math import comb
from typing import Dict, List, Tuple

from barnes_g import defaults
from barnes_g.barnes import log_barnes_g, log_g_hermite
from barnes_g.combinatorics import (bernoulli_number, double_factorial, harmonic,
                                    stirling_subset)
from barnes_g.exceptions import DomainError, InsufficientDecay
from barnes_g.model import (EvalResult, IdentityReport, PknCoefficients, PrecisionContext,
                            combine_errors, compare, log10_abs)
from barnes_g.quadrature import integrate_semi_infinite
from barnes_g.special import (bose_kernel, hurwitz_zeta_prime_neg, is_real, log_gamma,
                              to_mp, zeta_prime_0, zeta_prime_neg)


def _expand(roots_offsets: List[Fraction]) -> List[Fraction]:
    """Coefficients, lowest degree first, of prod (x + c) over the offsets c."""
    coeffs = [Fraction(1)]
    for offset in roots_offsets:
        shifted = [Fraction(0)] + coeffs
        coeffs = [shifted[i] + offset * (coeffs[i] if i < len(coeffs) else 0) for i in range(len(shifted))]
    return coeffs


def pkn_coefficients(n: int) -> PknCoefficients:
    """
    Exact coefficients of prod_{j=1}^{n-1} (x + j - 1/2).
    :param n: order, at least 1; n = 1 gives the empty product [1]
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    return PknCoefficients(n, _expand([Fraction(2 * j - 1, 2) for j in range(1, n)]))


def _shift_polynomial(n: int, z, mp) -> list:
    """Coefficients of prod_{j=1}^{n-1} (x + j - z) at working precision."""
    coeffs = [mp.one]
    for j in range(1, n):
        offset = j - z
        shifted = [mp.zero] + coeffs
        coeffs = [shifted[i] + offset * (coeffs[i] if i < len(coeffs) else 0) for i in range(len(shifted))]
    return coeffs


def _check_order(n: int):
    if n < 1:
        raise ValueError(f"multiple gamma order must be positive, got {n}")
    if n > defaults.MULTIGAMMA_MAX_ORDER:
        raise DomainError(f"multiple gamma orders above {defaults.MULTIGAMMA_MAX_ORDER} are not supported, got {n}")


def log_multigamma_hurwitz(n: int, z, ctx: PrecisionContext) -> EvalResult:
    """
    (n-1)! log Gamma_n(z) = sum_k p_k (zeta'(-k, z) - zeta'(-k)), where p_k are the
    coefficients of prod_{j=1}^{n-1} (x + j - z). One Hermite quadrature per power.
    """
    _check_order(n)
    mp = ctx.mp
    z = to_mp(mp, z)
    if mp.re(z) <= 0:
        raise DomainError(f"Hurwitz form needs Re z > 0, got z = {mp.nstr(z, 10)}")
    total = mp.zero
    errors = []
    evaluations = 0
    for k, p_k in enumerate(_shift_polynomial(n, z, mp)):
        derivative = hurwitz_zeta_prime_neg(k, z, ctx)
        total += p_k * (derivative.value - zeta_prime_neg(k, ctx))
        errors.append(derivative.err_log10 + log10_abs(mp, p_k))
        evaluations += derivative.evaluations
    value = total / mp.factorial(n - 1)
    if is_real(mp, z):
        value = mp.re(value)
    return EvalResult(value, combine_errors(*errors), "hurwitz-sum", evaluations)


def _kernel_integral(m: int, z, ctx: PrecisionContext) -> EvalResult:
    """
    2 (-1)**(m/2) int x**m atan(x/z) K(x) dx for even m,
    -(-1)**((m+1)/2) int x**m log(x**2 + z**2) K(x) dx for odd m.
    """
    mp = ctx.mp
    if m % 2 == 0:
        factor = 2 * (-1) ** (m // 2)

        def integrand(x):
            return x ** m * mp.atan(x / z) * bose_kernel(mp, x)
    else:
        factor = -(-1) ** ((m + 1) // 2)

        def integrand(x):
            if is_real(mp, z):
                log_sq = mp.log(x * x + z * z)
            else:
                log_sq = mp.log(z + 1j * x) + mp.log(z - 1j * x)
            return x ** m * log_sq * bose_kernel(mp, x)
    integral = integrate_semi_infinite(integrand, 2 * math.pi, ctx, growth=m,
                                       inner_scale=min(float(abs(z)), 1.0))
    return EvalResult(factor * integral.value, integral.err_log10 + math.log10(abs(factor)),
                      "kernel-integral", integral.evaluations)


def _log_multigamma_shifted(n: int, z, ctx: PrecisionContext, memo: Dict[int, EvalResult]) -> EvalResult:
    """
    log Gamma_n(z+1), with m = n - 1:

        m! log Gamma_n(z+1) = (-1)**m z**(m+1) (log z - H_{m+1})/(m+1)
                              - sum_k C(m,k) (-1)**(m-k) z**(m-k) zeta'(-k)
                              - sum_{r=1}^{m-1} (-1)**(m-r) {m,r} r! log Gamma_{r+1}(z+1)
                              + I_m(z)

    I_m is the atan kernel integral for even m and the log kernel for odd m.
    """
    if n in memo:
        return memo[n]
    mp = ctx.mp
    if n == 1:
        gamma_part = log_gamma(z, ctx)
        result = EvalResult(gamma_part.value + mp.log(z), gamma_part.err_log10, "binet-log-gamma",
                            gamma_part.evaluations)
    elif n == 2:
        g_part = log_g_hermite(z, ctx)
        result = EvalResult(-g_part.value, g_part.err_log10, g_part.method, g_part.evaluations)
    else:
        m = n - 1
        h = harmonic(m + 1)
        value = (-1) ** m * z ** (m + 1) * (mp.log(z) - mp.mpf(h.numerator) / h.denominator) / (m + 1)
        for k in range(m + 1):
            value -= comb(m, k) * (-1) ** (m - k) * z ** (m - k) * zeta_prime_neg(k, ctx)
        errors = []
        evaluations = 0
        for r in range(1, m):
            lower = _log_multigamma_shifted(r + 1, z, ctx, memo)
            weight = (-1) ** (m - r) * stirling_subset(m, r) * math.factorial(r)
            value -= weight * lower.value
            errors.append(lower.err_log10 + math.log10(abs(weight)))
            evaluations += lower.evaluations
        kernel = _kernel_integral(m, z, ctx)
        value += kernel.value
        errors.append(kernel.err_log10)
        result = EvalResult(value / math.factorial(m), combine_errors(*errors) - math.log10(math.factorial(m)),
                            "integral-representation", evaluations + kernel.evaluations)
    memo[n] = result
    return result


def log_multigamma(n: int, z, ctx: PrecisionContext) -> EvalResult:
    """
    log Gamma_n(z). Order 1 is log Gamma, order 2 is -log G; higher orders combine the
    integral representation of log Gamma_n(z+1) with the recurrence
    log Gamma_n(z) = log Gamma_n(z+1) + log Gamma_{n-1}(z).
    :param n: order, 1 <= n <= MULTIGAMMA_MAX_ORDER
    :param z: argument; Re z > 0 for n >= 3
    :param ctx: precision context
    """
    _check_order(n)
    mp = ctx.mp
    z = to_mp(mp, z)
    if n == 1:
        return log_gamma(z, ctx)
    if n == 2:
        g_value = log_barnes_g(z, ctx)
        if g_value.zero:
            raise DomainError(f"Gamma_2 has a pole at {mp.nstr(z, 10)}")
        return EvalResult(-g_value.value, g_value.err_log10, g_value.method, g_value.evaluations)
    if mp.re(z) <= 0:
        raise DomainError(f"log Gamma_{n} needs Re z > 0, got z = {mp.nstr(z, 10)}")
    if is_real(mp, z):
        z = mp.re(z)
    shifted = _log_multigamma_shifted(n, z, ctx, {})
    lower = log_multigamma(n - 1, z, ctx)
    logging.debug("log Gamma_%s(%s): shifted part %s", n, mp.nstr(z, 10), mp.nstr(shifted.value, 10))
    return EvalResult(shifted.value + lower.value, combine_errors(shifted.err_log10, lower.err_log10),
                      shifted.method, shifted.evaluations + lower.evaluations)


def log_gamma3_hermite(z, ctx: PrecisionContext) -> EvalResult:
    """
    log Gamma_3(z+1) from

        2 log Gamma_3(z+1) = (z**3/3)(log z - H_3) - (z**2 zeta'(0) - 2z zeta'(-1) + zeta'(-2))
                             - log G(z+1) - 2 int_0^inf x**2 atan(x/z) / (exp(2 pi x) - 1) dx.
    """
    mp = ctx.mp
    z = to_mp(mp, z)
    if mp.re(z) <= 0:
        raise DomainError(f"log Gamma_3 needs Re z > 0, got z = {mp.nstr(z, 10)}")
    if is_real(mp, z):
        z = mp.re(z)
    h_3 = harmonic(3)
    g_part = log_g_hermite(z, ctx)
    kernel = _kernel_integral(2, z, ctx)
    twice = z ** 3 / 3 * (mp.log(z) - mp.mpf(h_3.numerator) / h_3.denominator) \
        - (z * z * zeta_prime_0(ctx) - 2 * z * zeta_prime_neg(1, ctx) + zeta_prime_neg(2, ctx)) \
        - g_part.value + kernel.value
    return EvalResult(twice / 2, combine_errors(g_part.err_log10, kernel.err_log10), "triple-hermite",
                      g_part.evaluations + kernel.evaluations)


def _triple_terms(mp, z, k: int) -> Tuple[object, object]:
    """(B_{2k+2}/(4k(k+1) z**2k), B_{2k+2}/(2(k+1)(2k-1) z**(2k-1)))"""
    b = bernoulli_number(2 * k + 2)
    b_value = mp.mpf(b.numerator) / b.denominator
    return b_value / (4 * k * (k + 1) * z ** (2 * k)), b_value / (2 * (k + 1) * (2 * k - 1) * z ** (2 * k - 1))


def log_gamma3_asymptotic(z, ctx: PrecisionContext, terms: int = None) -> EvalResult:
    """
    log Gamma_3(z+1) from the large-z expansion

        2 log Gamma_3(z+1) ~ (z**3/3)(log z - 11/6) - (z**2/2)(log z - 3/2) - z**2 zeta'(0) + (log z)/12
                             + z (zeta'(0) + 2 zeta'(-1)) - zeta'(-1) - zeta'(-2)
                             - sum_k B_{2k+2}/(4k(k+1) z**2k) + sum_k B_{2k+2}/(2(k+1)(2k-1) z**(2k-1)).

    Both sums stop at the same k; the error estimate is the size of the first omitted pair.
    """
    mp = ctx.mp
    z = to_mp(mp, z)
    if mp.re(z) <= 0:
        raise DomainError(f"triple gamma expansion needs Re z > 0, got z = {mp.nstr(z, 10)}")
    if is_real(mp, z):
        z = mp.re(z)
    log_z = mp.log(z)
    zp0 = zeta_prime_0(ctx)
    zp1 = zeta_prime_neg(1, ctx)
    twice = z ** 3 / 3 * (log_z - mp.mpf(11) / 6) - z * z / 2 * (log_z - mp.mpf(3) / 2) - z * z * zp0 \
        + log_z / 12 + z * (zp0 + 2 * zp1) - zp1 - zeta_prime_neg(2, ctx)

    def pair_size(k):
        even, odd = _triple_terms(mp, z, k)
        return abs(even) + abs(odd)

    if terms is None:
        tolerance = mp.mpf(10) ** ctx.target_log10
        previous = mp.inf
        count = 0
        for k in range(1, defaults.ASYMPTOTIC_TERM_CAP + 1):
            size = pair_size(k)
            if size < tolerance:
                break
            if size > previous:
                raise InsufficientDecay(f"triple gamma expansion stalls at |z| = {mp.nstr(abs(z), 6)}")
            previous = size
            count = k
        else:
            raise InsufficientDecay(f"triple gamma expansion needs more than {defaults.ASYMPTOTIC_TERM_CAP} terms")
    else:
        count = terms
        size = pair_size(terms + 1)
        if terms >= 1 and size > pair_size(terms):
            raise InsufficientDecay(f"{terms} terms is past the smallest term at |z| = {mp.nstr(abs(z), 6)}")
    for k in range(1, count + 1):
        even, odd = _triple_terms(mp, z, k)
        twice += odd - even
    err = max(log10_abs(mp, size / 2), -ctx.working_digits)
    return EvalResult(twice / 2, err, "triple-asymptotic", count)


def multigamma_half(n: int, ctx: PrecisionContext):
    """
    log Gamma_n(1/2) in closed form:

        -(n-1)! log Gamma_n(1/2) = -(2n-3)!! log(pi)/2**n
                                   + log 2 sum_{k=1}^{n-1} P_k B_{k+1}/((k+1) 2**k)
                                   + sum_{k=1}^{n-1} (2**(k+1) - 1)/2**k P_k zeta'(-k),

    with P_k the coefficients of prod_{j=1}^{n-1} (x + j - 1/2).
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    mp = ctx.mp
    coeffs = pkn_coefficients(n).coeffs
    total = -double_factorial(2 * n - 3) * mp.log(mp.pi) / 2 ** n
    bernoulli_sum = Fraction(0)
    for k in range(1, n):
        bernoulli_sum += coeffs[k] * bernoulli_number(k + 1) / ((k + 1) * 2 ** k)
        weight = Fraction(2 ** (k + 1) - 1, 2 ** k) * coeffs[k]
        total += mp.mpf(weight.numerator) / weight.denominator * zeta_prime_neg(k, ctx)
    total += mp.log(2) * mp.mpf(bernoulli_sum.numerator) / bernoulli_sum.denominator
    return -total / math.factorial(n - 1)


def verify_int1_int2(n: int, ctx: PrecisionContext, tolerance_log10: float = None) -> Tuple[IdentityReport,
                                                                                             IdentityReport]:
    """
    Check the two integrals over x**(2n) atan x and x**(2n-1) log(1+x**2) against
    zeta'(-k) sums:

        2(-1)**n int x**(2n) atan(x) K = H_{2n+1}/(2n+1) + sum_{k=0}^{2n} (-1)**k C(2n,k) zeta'(-k)
        (-1)**n int x**(2n-1) log(1+x**2) K = H_{2n}/(2n) + sum_{k=0}^{2n-1} (-1)**k C(2n-1,k) zeta'(-k)
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    mp = ctx.mp
    if tolerance_log10 is None:
        tolerance_log10 = -(ctx.digits - defaults.VERIFY_SLACK_DIGITS)
    sign = (-1) ** n

    atan_integral = integrate_semi_infinite(
        lambda x: x ** (2 * n) * mp.atan(x) * bose_kernel(mp, x), 2 * math.pi, ctx, growth=2 * n)
    lhs1 = 2 * sign * atan_integral.value
    h1 = harmonic(2 * n + 1) / (2 * n + 1)
    rhs1 = mp.mpf(h1.numerator) / h1.denominator \
        + mp.fsum((-1) ** k * comb(2 * n, k) * zeta_prime_neg(k, ctx) for k in range(2 * n + 1))

    log_integral = integrate_semi_infinite(
        lambda x: x ** (2 * n - 1) * mp.log1p(x * x) * bose_kernel(mp, x), 2 * math.pi, ctx, growth=2 * n - 1)
    lhs2 = sign * log_integral.value
    h2 = harmonic(2 * n) / (2 * n)
    rhs2 = mp.mpf(h2.numerator) / h2.denominator \
        + mp.fsum((-1) ** k * comb(2 * n - 1, k) * zeta_prime_neg(k, ctx) for k in range(2 * n))

    return (compare(f"int1.n={n}", lhs1, rhs1, ctx, tolerance_log10),
            compare(f"int2.n={n}", lhs2, rhs2, ctx, tolerance_log10))

