"""
Independent routes to the Glaisher-Kinkelin constant: through zeta'(2), through the
rapidly convergent series over odd zeta values, through G(1/2) and through an integral
of x log x against the Bose kernel.
"""
import logging
import math
from typing import List, Tuple

import numpy

from barnes_g.barnes import log_g_psi_quadrature
from barnes_g.exceptions import DomainError
from barnes_g.model import EvalResult, GlaisherMethod, PrecisionContext, log10_abs
from barnes_g.quadrature import integrate_semi_infinite
from barnes_g.special import euler_gamma, log_two_pi, zeta_minus_one, zeta_prime_positive


def glaisher_series_terms(digits: int) -> int:
    """Terms of the odd zeta series needed for `digits` correct digits: ceil(digits/2 log2 10)."""
    return math.ceil(digits / 2 * math.log2(10))


def glaisher_series_tail_bound(mp, terms: int):
    """
    Bound on the series remainder after `terms` terms, from
    zeta(2k+1) - 1 <= 2**-(2k+1) (1 + 1/(k+1)) and a weight below 28/36.
    """
    return mp.mpf(7) / 9 * (1 + mp.mpf(1) / (terms + 1)) * mp.mpf(4) ** -terms / 6


def glaisher_series_term(k: int, ctx: PrecisionContext):
    """(zeta(2k+1) - 1)(28 + 3/(1+k) - 6/(2+k))/36"""
    mp = ctx.mp
    weight = 28 + mp.mpf(3) / (1 + k) - mp.mpf(6) / (2 + k)
    return zeta_minus_one(2 * k + 1, ctx).value * weight / 36


def glaisher_partial_sums(max_terms: int, ctx: PrecisionContext) -> List:
    """log 2/12 + the first N terms of the odd zeta series, for N = 1..max_terms."""
    mp = ctx.mp
    total = mp.log(2) / 12
    sums = []
    for k in range(1, max_terms + 1):
        total += glaisher_series_term(k, ctx)
        sums.append(total)
    return sums


def glaisher_partial_sum(terms: int, ctx: PrecisionContext):
    """log 2/12 + the first `terms` terms of the odd zeta series."""
    if terms < 1:
        raise ValueError(f"terms must be positive, got {terms}")
    return glaisher_partial_sums(terms, ctx)[-1]


def _log_a_zeta_prime_2(ctx: PrecisionContext) -> EvalResult:
    mp = ctx.mp
    derivative = zeta_prime_positive(2, ctx)
    value = euler_gamma(ctx) / 12 - derivative.value / (2 * mp.pi ** 2) + log_two_pi(ctx) / 12
    return EvalResult(value, derivative.err_log10 - float(mp.log10(2 * mp.pi ** 2)),
                      GlaisherMethod.ZETA_PRIME_2.value, derivative.evaluations)


def _log_a_odd_zeta_series(ctx: PrecisionContext) -> EvalResult:
    mp = ctx.mp
    terms = glaisher_series_terms(ctx.digits)
    value = glaisher_partial_sum(terms, ctx)
    err = max(log10_abs(mp, glaisher_series_tail_bound(mp, terms)), -ctx.working_digits)
    return EvalResult(value, err, GlaisherMethod.ODD_ZETA_SERIES.value, terms)


def _log_a_barnes_half(ctx: PrecisionContext) -> EvalResult:
    mp = ctx.mp
    log_g_half = log_g_psi_quadrature(-mp.mpf(1) / 2, ctx)
    value = mp.mpf(1) / 12 + mp.log(2) / 36 - mp.log(mp.pi) / 6 - 2 * log_g_half.value / 3
    return EvalResult(value, log_g_half.err_log10, GlaisherMethod.BARNES_HALF.value, log_g_half.evaluations)


def _log_a_log_integral(ctx: PrecisionContext) -> EvalResult:
    mp = ctx.mp
    integral = integrate_semi_infinite(lambda x: x * mp.log(x) / mp.expm1(x), 1.0, ctx,
                                       growth=1, segment=2 * math.pi)
    value = (1 + log_two_pi(ctx)) / 12 - integral.value / (2 * mp.pi ** 2)
    return EvalResult(value, integral.err_log10 - float(mp.log10(2 * mp.pi ** 2)),
                      GlaisherMethod.LOG_INTEGRAL.value, integral.evaluations)


_ROUTES = {
    GlaisherMethod.ZETA_PRIME_2: _log_a_zeta_prime_2,
    GlaisherMethod.ODD_ZETA_SERIES: _log_a_odd_zeta_series,
    GlaisherMethod.BARNES_HALF: _log_a_barnes_half,
    GlaisherMethod.LOG_INTEGRAL: _log_a_log_integral,
}


def log_glaisher(method: GlaisherMethod, ctx: PrecisionContext) -> EvalResult:
    """
    log A by the selected route.
    :param method: one of the GlaisherMethod routes
    :param ctx: precision context
    :return: log A, tagged with the route
    """
    logging.debug("log A via %s at %s digits", method.value, ctx.digits)
    return _ROUTES[method](ctx)


def glaisher_series_error_curve(max_terms: int, ctx: PrecisionContext) -> List[Tuple[int, float]]:
    """
    log10 |S_N - log A| for N = 1..max_terms, against the odd zeta series run 20 digits
    higher.
    """
    if max_terms < 4:
        raise DomainError(f"the error curve needs at least 4 points, got {max_terms}")
    mp = ctx.mp
    reference = mp.convert(log_glaisher(GlaisherMethod.ODD_ZETA_SERIES, ctx.with_digits(ctx.digits + 20)).value)
    curve = [(n, log10_abs(mp, partial - reference))
             for n, partial in enumerate(glaisher_partial_sums(max_terms, ctx), start=1)]
    logging.info("Odd zeta series error after %s terms: 10**%.1f", max_terms, curve[-1][1])
    return curve


def fit_convergence_slope(curve: List[Tuple[int, float]]) -> float:
    """Least-squares slope of log10 error against the number of terms."""
    points = [(n, err) for n, err in curve if math.isfinite(err)]
    slope, _ = numpy.polyfit([n for n, _ in points], [err for _, err in points], 1)
    return float(slope)
