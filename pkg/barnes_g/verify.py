"""
The identity suite: closed forms, cross-method agreements and exact anchors checked
numerically at a given precision and reported as IdentityReport rows.
"""
import logging
import math
from fractions import Fraction
from math import comb
from typing import Callable, Dict, List

import numpy
import pandas as pd
from pandas import DataFrame

from barnes_g import defaults
from barnes_g.barnes import (LOG_G_METHODS, log_barnes_g, log_g, log_g_asymptotic, log_g_hermite,
                             multiplication_rhs, reflection_sides, special_value, special_value_argument)
from barnes_g.combinatorics import (bell_number, bernoulli_number, bernoulli_poly, hankel_bell_det,
                                    stirling_subset, superfactorial)
from barnes_g.exceptions import DomainError
from barnes_g.glaisher import (fit_convergence_slope, glaisher_partial_sum, glaisher_series_error_curve,
                               glaisher_series_terms, log_glaisher)
from barnes_g.model import (GlaisherMethod, IdentityReport, PrecisionContext, SpecialValueKey, compare,
                            log10_abs, render_value)
from barnes_g.multigamma import (log_gamma3_asymptotic, log_gamma3_hermite, log_multigamma,
                                 log_multigamma_hurwitz, multigamma_half, verify_int1_int2)
from barnes_g.quadrature import integrate_path, integrate_semi_infinite
from barnes_g.special import (bose_kernel, catalan, clausen_cl2, digamma, fermi_kernel, glaisher_log,
                              hurwitz_zeta, hurwitz_zeta_prime_neg, hurwitz_zeta_prime_neg1, log_gamma,
                              log_gamma_reflection_residual, log_two_pi, riemann_zeta, to_mp, trigamma,
                              zeta_minus_one, zeta_minus_one_integral, zeta_prime_neg, zeta_prime_neg1_integral,
                              zeta_prime_neg_functional)

HALF = Fraction(1, 2)

REFLECTION_POINTS = (Fraction(1, 4), Fraction(1, 3), Fraction(1, 2))
NEGATIVE_AXIS_POINTS = (Fraction(-1, 2), Fraction(-3, 10), Fraction(-3, 2), Fraction(-17, 10))
MULTIPLICATION_CASES = ((2, Fraction(3, 4)), (2, Fraction(1)), (3, Fraction(1, 3)))
METHOD_POINTS = (HALF, Fraction(1), Fraction(2), Fraction(5, 2), Fraction(4), Fraction(10))
RECURRENCE_POINTS = (HALF, Fraction(1), Fraction(3, 2), Fraction(5, 2))
BRIDGE_POINTS = (HALF, Fraction(1), Fraction(3, 2), Fraction(2), Fraction(7, 3))
ZETA_SHIFT_POINTS = (HALF, Fraction(1), Fraction(5, 2))
KINKELIN_POINTS = (complex(0.5, 0.5), complex(0.25, -0.75), complex(-0.5, 0.25))
ASYMPTOTIC_POINT = 40
ASYMPTOTIC_ORDERS = range(2, 9)
HANKEL_MAX_ORDER = 6


def default_tolerance(ctx: PrecisionContext) -> float:
    """log10 tolerance used when none is given: -(digits - slack)."""
    return -(ctx.digits - defaults.VERIFY_SLACK_DIGITS)


def _nearest_branch(mp, lhs, rhs):
    """rhs moved by the multiple of 2 pi i that brings it closest to lhs."""
    turns = mp.nint(mp.im(mp.convert(lhs) - mp.convert(rhs)) / (2 * mp.pi))
    if turns == 0:
        return rhs
    return mp.convert(rhs) + mp.mpc(0, 2 * mp.pi * turns)


def _combinatorics(ctx: PrecisionContext, tolerance: float) -> List[IdentityReport]:
    stirling_misses = sum(
        1 for n in range(1, 25) for k in range(1, n + 1)
        if stirling_subset(n + 1, k) != k * stirling_subset(n, k) + stirling_subset(n, k - 1))
    bernoulli_misses = sum(
        1 for n in range(2, 31)
        if sum(comb(n, k) * bernoulli_number(k) for k in range(n)) != 0)
    # Bell numbers from the Touchard recurrence B_{n+1} = sum_k C(n, k) B_k
    bell_misses = sum(
        1 for n in range(0, 25)
        if bell_number(n + 1) != sum(comb(n, k) * bell_number(k) for k in range(n + 1)))
    return [
        compare("combinatorics.stirling-recurrence", stirling_misses, 0, ctx, tolerance),
        compare("combinatorics.bernoulli-sum", bernoulli_misses, 0, ctx, tolerance),
        compare("combinatorics.bell-recurrence", bell_misses, 0, ctx, tolerance),
    ]


def _quadrature(ctx: PrecisionContext, tolerance: float) -> List[IdentityReport]:
    mp = ctx.mp
    reports = []
    for k in range(1, 7):
        integral = integrate_semi_infinite(lambda t, k=k: t ** (2 * k - 1) * bose_kernel(mp, t),
                                           2 * math.pi, ctx, growth=2 * k - 1)
        exact = (-1) ** (k + 1) * bernoulli_number(2 * k) / (4 * k)
        reports.append(compare(f"quadrature.bernoulli-moment.k={k}", integral.value, to_mp(mp, exact),
                               ctx, tolerance))
    return reports


def _zeta(ctx: PrecisionContext, tolerance: float) -> List[IdentityReport]:
    mp = ctx.mp
    reports = []
    for s in (Fraction(-1, 2), Fraction(2), Fraction(3)):
        for z in ZETA_SHIFT_POINTS:
            lhs = hurwitz_zeta(s, z, ctx).value - hurwitz_zeta(s, z + 1, ctx).value
            rhs = to_mp(mp, z) ** -to_mp(mp, s)
            reports.append(compare(f"zeta.hermite-shift.s={s}.z={z}", lhs, rhs, ctx, tolerance))

    quarter = Fraction(1, 4)
    reports.append(compare("zeta.negative-integer.s=-1.z=1/4", hurwitz_zeta(-1, quarter, ctx).value,
                           -bernoulli_poly(2, to_mp(mp, quarter), ctx) / 2, ctx, tolerance))
    reports.append(compare("zeta.riemann.s=2", riemann_zeta(2, ctx).value, mp.pi ** 2 / 6, ctx, tolerance))
    reports.append(compare("zeta.half-argument", hurwitz_zeta_prime_neg1(HALF, ctx).value,
                           -zeta_prime_neg(1, ctx) / 2 - mp.log(2) / 24, ctx, tolerance))
    reports.append(compare("zeta.zeta3-minus-one", zeta_minus_one_integral(3, ctx).value,
                           zeta_minus_one(3, ctx).value, ctx, tolerance))
    for k in (2, 3):
        reports.append(compare(f"zeta.zeta-prime-neg.k={k}", hurwitz_zeta_prime_neg(k, 1, ctx).value,
                               zeta_prime_neg(k, ctx), ctx, tolerance))
    for z in (Fraction(1, 3), Fraction(1, 4)):
        residual = log_gamma_reflection_residual(z, ctx)
        reports.append(compare(f"zeta.loggamma-reflection.z={z}", residual, 0, ctx, tolerance))
    sqrt3 = mp.sqrt(3)
    reports.append(compare("zeta.clausen.theta=2pi/3", clausen_cl2(2 * mp.pi / 3, ctx).value,
                           (trigamma(Fraction(1, 3), ctx).value - 2 * mp.pi ** 2 / 3) / (3 * sqrt3),
                           ctx, tolerance))
    reports.append(compare("zeta.clausen.theta=pi/2", catalan(ctx),
                           (trigamma(quarter, ctx).value - mp.pi ** 2) / 8, ctx, tolerance))
    return reports


def _table(ctx: PrecisionContext, tolerance: float) -> List[IdentityReport]:
    """Integrals against the Bose and Fermi kernels with closed forms over zeta'(-1), log Gamma and psi."""
    mp = ctx.mp
    zp1 = zeta_prime_neg_functional(1, ctx)
    log2 = mp.log(2)

    def fermi_integral(integrand, growth: float = 1.0, inner_scale: float = 1.0):
        return integrate_semi_infinite(lambda x: integrand(x) * fermi_kernel(mp, x), 2 * math.pi, ctx,
                                       growth=growth, inner_scale=inner_scale).value

    reports = [compare("table.1", zeta_prime_neg1_integral(ctx).value, zp1, ctx, tolerance)]

    entry2 = fermi_integral(lambda x: x * mp.log(x))
    printed = 12 * zp1 + log2
    factor = Fraction(float(entry2 / printed)).limit_denominator(1000)
    note = f"quadrature matches (12 zeta'(-1) + log 2) * {factor}"
    logging.info("Table entry 2 flagged: %s", note)
    reports.append(compare("table.2", entry2, printed, ctx, tolerance, flagged=True, note=note))
    reports.append(compare("table.2.fitted", entry2, printed * to_mp(mp, factor), ctx, tolerance))

    reports.append(compare("table.3", fermi_integral(lambda x: x * mp.log1p(x * x)),
                           mp.mpf(3) / 4 - 23 * log2 / 24 + zp1 / 2, ctx, tolerance))
    for z in (HALF, Fraction(1), Fraction(3)):
        w = to_mp(mp, z)
        lhs = 2 * fermi_integral(lambda x, w=w: mp.atan(x / w), growth=0.0, inner_scale=min(float(w), 1.0))
        rhs = w * mp.log(w) - w + log_two_pi(ctx) / 2 - log_gamma(w + mp.mpf(1) / 2, ctx).value
        reports.append(compare(f"table.4.z={z}", lhs, rhs, ctx, tolerance))
    reports.append(compare("table.5", 4 * fermi_integral(mp.atan, growth=0.0), 3 * log2 - 2, ctx, tolerance))
    for z in (Fraction(1), Fraction(5, 2)):
        w = to_mp(mp, z)
        lhs = 2 * fermi_integral(lambda x, w=w: x / (x * x + w * w))
        rhs = digamma(w + mp.mpf(1) / 2, ctx).value - mp.log(w)
        reports.append(compare(f"table.6.z={z}", lhs, rhs, ctx, tolerance))
    for z in (HALF, Fraction(2)):
        w = to_mp(mp, z)
        integral = integrate_semi_infinite(lambda x, w=w: x / (x * x + w * w) * bose_kernel(mp, x),
                                           2 * math.pi, ctx, inner_scale=min(float(w), 1.0))
        rhs = mp.log(w) - digamma(w, ctx).value - 1 / (2 * w)
        reports.append(compare(f"table.7.z={z}", 2 * integral.value, rhs, ctx, tolerance))
    return reports


def _bridge(ctx: PrecisionContext, tolerance: float) -> List[IdentityReport]:
    """log G(z+1) - z log Gamma(z) = zeta'(-1) - zeta'(-1, z)"""
    reports = []
    for z in BRIDGE_POINTS:
        lhs = log_g(z + 1, ctx) - to_mp(ctx.mp, z) * log_gamma(z, ctx).value
        rhs = zeta_prime_neg(1, ctx) - hurwitz_zeta_prime_neg1(z, ctx).value
        reports.append(compare(f"bridge.z={z}", lhs, rhs, ctx, tolerance))
    return reports


def _methods(ctx: PrecisionContext, tolerance: float) -> List[IdentityReport]:
    reports = []
    for z in METHOD_POINTS:
        reference = log_g_hermite(z, ctx).value
        for tag, evaluate in LOG_G_METHODS.items():
            if evaluate is log_g_hermite:
                continue
            reports.append(compare(f"methods.{tag}.z={z}", evaluate(z, ctx).value, reference, ctx, tolerance))
    return reports


def _reflection(ctx: PrecisionContext, tolerance: float) -> List[IdentityReport]:
    mp = ctx.mp
    reports = []
    for z in REFLECTION_POINTS:
        lhs, rhs = reflection_sides(z, ctx)
        reports.append(compare(f"reflection.z={z}", lhs, rhs, ctx, tolerance))
    # the Clausen form on the negative axis against log G(x) = log G(x+m) - sum_j log Gamma(x+j)
    for x in NEGATIVE_AXIS_POINTS:
        shift = math.ceil(-x)
        recurrence = log_barnes_g(x + shift, ctx).value
        for j in range(shift):
            recurrence -= log_gamma(x + j, ctx).value
        direct = log_barnes_g(x, ctx).value
        reports.append(compare(f"reflection.negative-axis.x={x}", direct,
                               _nearest_branch(mp, direct, recurrence), ctx, tolerance))
    return reports


def recurrence_points(count: int = defaults.RECURRENCE_SAMPLES, seed: int = defaults.RECURRENCE_SEED):
    """
    Seeded sample with Re z in (0.1, 20). Every other point is real, the rest have
    Im z in (-1/2, 1/2). Coordinates are rounded to exact thousandths.
    """
    rng = numpy.random.default_rng(seed)
    real_parts = rng.uniform(0.1, 20, count)
    imaginary_parts = rng.uniform(-0.5, 0.5, count)
    return [(Fraction(round(float(re) * 1000), 1000),
             Fraction(0) if i % 2 == 0 else Fraction(round(float(im) * 1000), 1000))
            for i, (re, im) in enumerate(zip(real_parts, imaginary_parts))]


def _recurrence(ctx: PrecisionContext, tolerance: float) -> List[IdentityReport]:
    """log G(z+1) = log Gamma(z) + log G(z) through the dispatcher, up to a multiple of 2 pi i."""
    mp = ctx.mp
    reports = []
    for re, im in recurrence_points():
        z = re if im == 0 else mp.mpc(to_mp(mp, re), to_mp(mp, im))
        lhs = log_g(z + 1, ctx)
        rhs = log_gamma(z, ctx).value + log_g(z, ctx)
        label = f"{float(re):.3f}" if im == 0 else f"{float(re):.3f}{float(im):+.3f}i"
        reports.append(compare(f"recurrence.z={label}", lhs, _nearest_branch(mp, lhs, rhs), ctx, tolerance))
    return reports


def _multiplication(ctx: PrecisionContext, tolerance: float) -> List[IdentityReport]:
    return [compare(f"multiplication.n={n}.z={z}", log_g(n * z, ctx), multiplication_rhs(n, z, ctx), ctx, tolerance)
            for n, z in MULTIPLICATION_CASES]


def _special_values(ctx: PrecisionContext, tolerance: float) -> List[IdentityReport]:
    mp = ctx.mp
    reports = []
    for key in SpecialValueKey:
        q = special_value_argument(key)
        reports.append(compare(f"special-values.z={q}", special_value(key, ctx),
                               log_barnes_g(q, ctx).value, ctx, tolerance))
    log_a = glaisher_log(ctx)
    log_pi = mp.log(mp.pi)
    log2 = mp.log(2)
    particular = {
        1: log_pi / 2,
        2: log_pi / 4 - log2 / 24 - mp.mpf(1) / 8 + 3 * log_a / 2,
        3: 3 * log_pi / 16 - log2 / 24 - mp.mpf(1) / 8 + 3 * log_a / 2
        + 7 * riemann_zeta(3, ctx).value / (32 * mp.pi ** 2),
    }
    for n, value in particular.items():
        reports.append(compare(f"special-values.multigamma-half.n={n}", multigamma_half(n, ctx), value,
                               ctx, tolerance))
    return reports


def _multigamma(ctx: PrecisionContext, tolerance: float) -> List[IdentityReport]:
    reports = []
    for n in (2, 3, 4):
        for z in RECURRENCE_POINTS:
            lhs = log_multigamma(n, z + 1, ctx).value
            rhs = log_multigamma(n, z, ctx).value - log_multigamma(n - 1, z, ctx).value
            reports.append(compare(f"multigamma.recurrence.n={n}.z={z}", lhs, rhs, ctx, tolerance))
    for n in range(1, 5):
        reports.append(compare(f"multigamma.unit.n={n}", log_multigamma(n, 1, ctx).value, 0, ctx, tolerance))
        reports.append(compare(f"multigamma.half.n={n}", log_multigamma(n, HALF, ctx).value,
                               multigamma_half(n, ctx), ctx, tolerance))
    for n in (3, 4):
        for z in (HALF, Fraction(5, 2)):
            reports.append(compare(f"multigamma.hurwitz.n={n}.z={z}", log_multigamma(n, z, ctx).value,
                                   log_multigamma_hurwitz(n, z, ctx).value, ctx, tolerance))
    for z in (Fraction(1), Fraction(2), Fraction(5)):
        reports.append(compare(f"multigamma.triple-hermite.z={z}", log_gamma3_hermite(z, ctx).value,
                               log_multigamma(3, z + 1, ctx).value, ctx, tolerance))
    return reports


def _int1_int2(ctx: PrecisionContext, tolerance: float) -> List[IdentityReport]:
    reports = []
    for n in (1, 2):
        reports.extend(verify_int1_int2(n, ctx, tolerance))
    return reports


def _hankel_bell(ctx: PrecisionContext, tolerance: float) -> List[IdentityReport]:
    """det of the Bell Hankel matrix against G(n+1) from the dispatcher and the Hermite integral, exactly."""
    mp = ctx.mp
    reports = []
    for n in range(1, HANKEL_MAX_ORDER + 1):
        det = hankel_bell_det(n)
        from_dispatcher = int(mp.nint(mp.exp(log_barnes_g(n + 1, ctx).value)))
        from_integral = int(mp.nint(mp.exp(log_g_hermite(n, ctx).value)))
        reports.append(compare(f"hankel-bell.n={n}", det, from_dispatcher, ctx, tolerance))
        reports.append(compare(f"hankel-bell.hermite.n={n}", det, from_integral, ctx, tolerance))
        reports.append(compare(f"hankel-bell.superfactorial.n={n}", det, superfactorial(n), ctx, tolerance))
    return reports


def _glaisher(ctx: PrecisionContext, tolerance: float) -> List[IdentityReport]:
    mp = ctx.mp
    reference = log_glaisher(GlaisherMethod.ODD_ZETA_SERIES, ctx).value
    reports = [compare(f"glaisher.{method.value}", log_glaisher(method, ctx).value, reference, ctx, tolerance)
               for method in GlaisherMethod if method is not GlaisherMethod.ODD_ZETA_SERIES]
    reports.append(compare("glaisher.zeta-prime-neg1", mp.mpf(1) / 12 - reference, zeta_prime_neg(1, ctx),
                           ctx, tolerance))

    terms = glaisher_series_terms(ctx.digits)
    high = log_glaisher(GlaisherMethod.ODD_ZETA_SERIES, ctx.with_digits(ctx.digits + 20)).value
    reports.append(compare(f"glaisher.term-count.n={terms}", glaisher_partial_sum(terms, ctx), mp.convert(high),
                           ctx, -ctx.digits))

    curve = glaisher_series_error_curve(terms, ctx)
    # the first few terms still carry the 3**-(2k+1) part of zeta(2k+1) - 1
    slope = fit_convergence_slope(curve[4:])
    logging.info("Odd zeta series convergence slope: %.4f per term", slope)
    reports.append(compare("glaisher.convergence-slope", slope, -math.log10(4), ctx, math.log10(0.05)))
    return reports


def _asymptotic(ctx: PrecisionContext, tolerance: float) -> List[IdentityReport]:
    """
    At z = 40, each truncation of the two large-z expansions is closer to the integral
    value than its first omitted term. `tolerance` is unused: the bound is per order.
    """
    mp = ctx.mp
    z = ASYMPTOTIC_POINT
    expansions = (
        ("log-g", log_g_asymptotic, log_g_hermite(z, ctx).value),
        ("triple-gamma", log_gamma3_asymptotic, log_gamma3_hermite(z, ctx).value),
    )
    reports = []
    for label, expansion, reference in expansions:
        for terms in ASYMPTOTIC_ORDERS:
            result = expansion(z, ctx, terms=terms)
            observed = log10_abs(mp, result.value - reference)
            status = "pass" if observed < result.err_log10 else "fail"
            reports.append(IdentityReport(f"asymptotic.{label}.terms={terms}", render_value(ctx, result.value),
                                          render_value(ctx, reference), observed, result.err_log10, status))
    return reports


def _kinkelin(ctx: PrecisionContext, tolerance: float) -> List[IdentityReport]:
    """log G(1-z) = log G(1+z) - z log 2pi + int_0^z pi x cot(pi x) dx off the real axis."""
    mp = ctx.mp
    reports = []
    for point in KINKELIN_POINTS:
        z = mp.mpc(point.real, point.imag)
        integral = integrate_path(lambda x: mp.pi * x * mp.cot(mp.pi * x), [0, z], ctx)
        lhs = log_barnes_g(1 - z, ctx).value
        rhs = log_barnes_g(1 + z, ctx).value - z * log_two_pi(ctx) + integral.value
        reports.append(compare(f"kinkelin.z={point.real:g}{point.imag:+g}i", lhs,
                               _nearest_branch(mp, lhs, rhs), ctx, tolerance))
    return reports


GROUPS: Dict[str, Callable[[PrecisionContext, float], List[IdentityReport]]] = {
    "combinatorics": _combinatorics,
    "quadrature": _quadrature,
    "zeta": _zeta,
    "table": _table,
    "bridge": _bridge,
    "recurrence": _recurrence,
    "methods": _methods,
    "reflection": _reflection,
    "multiplication": _multiplication,
    "special-values": _special_values,
    "multigamma": _multigamma,
    "int1-int2": _int1_int2,
    "hankel-bell": _hankel_bell,
    "glaisher": _glaisher,
    "asymptotic": _asymptotic,
    "kinkelin": _kinkelin,
}


def run_verify(selection: str, ctx: PrecisionContext, tolerance_log10: float = None) -> List[IdentityReport]:
    """
    Run one identity group, or every group for "all".
    :param selection: "all" or a key of GROUPS
    :param ctx: precision context
    :param tolerance_log10: pass threshold, defaults to -(digits - 5)
    :return: reports sorted by identity_id
    """
    if selection != "all" and selection not in GROUPS:
        raise DomainError(f"unknown identity group {selection!r}, expected 'all' or one of {', '.join(GROUPS)}")
    tolerance = default_tolerance(ctx) if tolerance_log10 is None else tolerance_log10
    names = list(GROUPS) if selection == "all" else [selection]
    reports = []
    for name in names:
        logging.info("Checking identity group %s at %s digits", name, ctx.digits)
        for report in GROUPS[name](ctx, tolerance):
            if report.status == "fail":
                logging.error("Identity %s failed: residual 10**%.1f, tolerance 10**%.1f",
                              report.identity_id, report.residual_log10, report.tolerance_log10)
            reports.append(report)
    return sorted(reports, key=lambda report: report.identity_id)


def failures(reports: List[IdentityReport]) -> List[IdentityReport]:
    """Reports that failed; flagged entries never count."""
    return [report for report in reports if report.status == "fail"]


def reports_dataframe(reports: List[IdentityReport]) -> DataFrame:
    """One row per identity, in report order."""
    return pd.DataFrame(
        [{"identity_id": report.identity_id,
          "residual_log10": report.residual_log10,
          "tolerance_log10": report.tolerance_log10,
          "status": report.status,
          "note": report.note} for report in reports],
        columns=["identity_id", "residual_log10", "tolerance_log10", "status", "note"])
