"""
The Barnes G-function: four independent evaluations of log G(z+1), the region-aware
dispatcher for log G(z) over the whole plane, the reflection and multiplication
identities, and closed-form values at rational points.
"""
import logging
import math
from fractions import Fraction
from typing import Tuple

from barnes_g import defaults
from barnes_g.combinatorics import bernoulli_number, bernoulli_poly, harmonic, superfactorial
from barnes_g.exceptions import DomainError, InsufficientDecay, PathCrossesPole, ZeroFactor
from barnes_g.model import (BarnesMethod, EvalResult, PrecisionContext, SpecialValueKey,
                            combine_errors, log10_abs)
from barnes_g.quadrature import integrate_path, integrate_semi_infinite
from barnes_g.special import (bose_kernel, catalan, clausen_cl2, digamma, glaisher_log,
                              is_nonpositive_integer, is_real, log_gamma, log_two_pi,
                              real_if_real_input, to_mp, trigamma, zeta_prime_0, zeta_prime_neg)

# beyond this the closed form over factorials is slower than the asymptotic branch
CLOSED_FORM_MAX_INTEGER = 400


def _require_right_half_plane(mp, z, name: str):
    if mp.re(z) <= 0:
        raise DomainError(f"{name} needs Re z > 0, got z = {mp.nstr(z, 10)}")


def log_g_hermite(z, ctx: PrecisionContext) -> EvalResult:
    """
    log G(z+1) from the Hermite representation

        log G(z+1) = (z**2/2)(log z - H_2) - (z zeta'(0) - zeta'(-1))
                     - int_0^inf x log(x**2 + z**2) / (exp(2 pi x) - 1) dx.
    :param z: argument with Re z > 0
    :param ctx: precision context
    :return: log G(z+1)
    """
    mp = ctx.mp
    z = to_mp(mp, z)
    _require_right_half_plane(mp, z, "Hermite representation")
    if is_real(mp, z):
        z = mp.re(z)

        def integrand(x):
            return x * mp.log(x * x + z * z) * bose_kernel(mp, x)
    else:
        def integrand(x):
            return x * (mp.log(z + 1j * x) + mp.log(z - 1j * x)) * bose_kernel(mp, x)

    integral = integrate_semi_infinite(integrand, 2 * math.pi, ctx, growth=1,
                                       inner_scale=min(float(abs(z)), 1.0))
    h_2 = harmonic(2)
    value = z * z / 2 * (mp.log(z) - mp.mpf(h_2.numerator) / h_2.denominator) \
        - (z * zeta_prime_0(ctx) - zeta_prime_neg(1, ctx)) - integral.value
    return EvalResult(value, integral.err_log10, BarnesMethod.HERMITE_INTEGRAL.value, integral.evaluations)


def _binet_bracket_over_square(mp, x, series_terms: int):
    """
    (1/(1 - exp(-x)) - 1/x - 1/2 - x/12) / x**2, by its Taylor series
    sum_{k >= 2} B_2k x**(2k-3) / (2k)! near the origin.
    """
    if x < 1:
        total = mp.zero
        x2 = x * x
        power = x
        for k in range(2, series_terms + 2):
            b_2k = bernoulli_number(2 * k)
            total += mp.mpf(b_2k.numerator) / b_2k.denominator * power / mp.factorial(2 * k)
            power *= x2
        return total
    return (-1 / mp.expm1(-x) - 1 / x - mp.mpf(1) / 2 - x / 12) / (x * x)


def log_g_binet(z, ctx: PrecisionContext) -> EvalResult:
    """
    log G(z+1) from the Binet-type representation

        log G(z+1) = z log Gamma(z) + z**2/4 - (log z/2) B_2(z) - log A
                     + int_0^inf exp(-z x)/x**2 (1/(1 - exp(-x)) - 1/x - 1/2 - x/12) dx.

    The bracket is O(x**3), so the integrand is O(x) at the origin.
    """
    mp = ctx.mp
    z = to_mp(mp, z)
    _require_right_half_plane(mp, z, "Binet representation")
    if is_real(mp, z):
        z = mp.re(z)
    # Taylor terms for x < 1: ratio of consecutive terms is at most (1/2pi)**2
    series_terms = int(ctx.working_digits / 1.5) + 2

    def integrand(x):
        return mp.exp(-z * x) * _binet_bracket_over_square(mp, x, series_terms)

    decay = float(mp.re(z))
    oscillation = abs(float(mp.im(z)))
    segment = 2 * math.pi if oscillation <= 1 else 2 * math.pi / oscillation
    integral = integrate_semi_infinite(integrand, decay, ctx, segment=segment)
    gamma_part = log_gamma(z, ctx)
    value = z * gamma_part.value + z * z / 4 - mp.log(z) / 2 * bernoulli_poly(2, z, ctx) \
        - glaisher_log(ctx) + integral.value
    err = combine_errors(integral.err_log10, gamma_part.err_log10 + log10_abs(mp, z))
    return EvalResult(value, err, BarnesMethod.BINET_INTEGRAL.value,
                      integral.evaluations + gamma_part.evaluations)


def _asymptotic_term(mp, z, k: int):
    """B_{2k+2} / (4k(k+1) z**2k)"""
    b = bernoulli_number(2 * k + 2)
    return mp.mpf(b.numerator) / b.denominator / (4 * k * (k + 1) * z ** (2 * k))


def log_g_asymptotic(z, ctx: PrecisionContext, terms: int = None) -> EvalResult:
    """
    log G(z+1) from the large-z expansion

        (z**2/2)(log z - 3/2) - (log z)/12 - z zeta'(0) + zeta'(-1)
        + sum_{k=1}^{n} B_{2k+2} / (4k(k+1) z**2k),

    with the first omitted term as the error estimate.
    :param z: argument with Re z > 0
    :param ctx: precision context
    :param terms: correction terms to keep; None stops at the first term below tolerance
    :return: log G(z+1)
    """
    mp = ctx.mp
    z = to_mp(mp, z)
    _require_right_half_plane(mp, z, "asymptotic expansion")
    if is_real(mp, z):
        z = mp.re(z)
    log_z = mp.log(z)
    value = z * z / 2 * (log_z - mp.mpf(3) / 2) - log_z / 12 - z * zeta_prime_0(ctx) + zeta_prime_neg(1, ctx)

    if terms is None:
        tolerance = mp.mpf(10) ** ctx.target_log10
        previous = mp.inf
        count = 0
        for k in range(1, defaults.ASYMPTOTIC_TERM_CAP + 1):
            term = _asymptotic_term(mp, z, k)
            size = abs(term)
            if size < tolerance:
                break
            if size > previous:
                raise InsufficientDecay(
                    f"asymptotic series for log G stalls at 10**{log10_abs(mp, previous):.1f} "
                    f"for |z| = {mp.nstr(abs(z), 6)}")
            value += term
            previous = size
            count = k
        else:
            raise InsufficientDecay(f"asymptotic series needs more than {defaults.ASYMPTOTIC_TERM_CAP} terms")
    else:
        if terms < 0:
            raise ValueError(f"terms must be non-negative, got {terms}")
        for k in range(1, terms + 1):
            value += _asymptotic_term(mp, z, k)
        count = terms
        size = abs(_asymptotic_term(mp, z, terms + 1))
        if terms >= 1 and size > abs(_asymptotic_term(mp, z, terms)):
            raise InsufficientDecay(f"{terms} terms is past the smallest term at |z| = {mp.nstr(abs(z), 6)}")

    err = max(log10_abs(mp, size), -ctx.working_digits)
    return EvalResult(value, err, BarnesMethod.ASYMPTOTIC_SHIFTED.value, count)


def _psi_integrand(ctx):
    """x psi(x+1) - 1, equal to x psi(x) and regular at the origin."""
    return lambda x: x * digamma(x + 1, ctx).value - 1


def log_g_psi_quadrature(z, ctx: PrecisionContext) -> EvalResult:
    """
    log G(z+1) = z(1-z)/2 + (z/2) log 2pi + int_0^z x psi(x) dx along the straight segment.

    For -2 < Re z <= -1 the pole of psi at x = -1 is taken out explicitly:
    int_0^z x psi(x) dx = log(z+1) + int_0^z (x psi(x+2) - 2) dx.
    """
    mp = ctx.mp
    z = to_mp(mp, z)
    if z == -1:
        raise PathCrossesPole("the segment from 0 to -1 ends on the pole of psi at -1")
    if mp.re(z) <= -2:
        raise DomainError(f"psi quadrature covers Re z > -2, got z = {mp.nstr(z, 10)}")
    if mp.re(z) > -1:
        integral = integrate_path(_psi_integrand(ctx), [0, z], ctx)
        extra = mp.zero
    else:
        integral = integrate_path(lambda x: x * digamma(x + 2, ctx).value - 2, [0, z], ctx)
        extra = mp.log(z + 1)
    value = z * (1 - z) / 2 + z / 2 * log_two_pi(ctx) + integral.value + extra
    if mp.re(z) > -1:
        value = real_if_real_input(mp, z, value)
    return EvalResult(value, integral.err_log10, BarnesMethod.PSI_QUADRATURE.value, integral.evaluations)


def _shift_radius(ctx: PrecisionContext) -> float:
    """|w| beyond which the asymptotic series reaches working precision."""
    return ctx.working_digits * math.log(10) / (2 * math.pi) + 1


def _log_g_right_half_plane(z, ctx: PrecisionContext) -> EvalResult:
    """
    log G(z) for Re z > 0: shift w = z + m outwards, evaluate log G(w) by the asymptotic
    series and undo the shift with

        sum_{j<m} log Gamma(z+j) = m log Gamma(z) + sum_{i<m-1} (m-1-i) log(z+i).
    """
    mp = ctx.mp
    radius = _shift_radius(ctx)
    im = abs(float(mp.im(z)))
    shift = 0
    if abs(z - 1) < radius and im < radius:
        shift = max(0, math.ceil(math.sqrt(radius * radius - im * im) - float(mp.re(z)) + 1))
    if mp.re(z) <= 1:
        # far up the imaginary axis the radius test alone leaves Re(z + shift - 1) <= 0
        shift = max(shift, math.ceil(2 - float(mp.re(z))))
    asymptotic = log_g_asymptotic(z + shift - 1, ctx)
    if shift == 0:
        return asymptotic
    gamma_part = log_gamma(z, ctx)
    correction = shift * gamma_part.value + mp.fsum((shift - 1 - i) * mp.log(z + i) for i in range(shift - 1))
    value = real_if_real_input(mp, z, asymptotic.value - correction)
    err = combine_errors(asymptotic.err_log10, gamma_part.err_log10 + math.log10(shift))
    logging.debug("log G dispatcher: shifted %s by %s", mp.nstr(z, 10), shift)
    return EvalResult(value, err, BarnesMethod.RECURRENCE_SHIFT.value,
                      asymptotic.evaluations + gamma_part.evaluations)


def _log_g_negative_axis(z, ctx: PrecisionContext) -> EvalResult:
    """
    log G(-x) for real x > 0 off the integers from

        G(-x) = (-1)**(floor(x/2) - 1) G(x+2) |sin(pi x)/pi|**(x+1) exp(Cl2(2 pi {x})/(2 pi)),

    with log(-1) = i pi for negative values.
    """
    mp = ctx.mp
    x = -mp.re(z)
    floor_x = mp.floor(x)
    shifted = _log_g_right_half_plane(x + 2, ctx)
    clausen = clausen_cl2(2 * mp.pi * (x - floor_x), ctx)
    value = shifted.value + (x + 1) * mp.log(abs(mp.sin(mp.pi * x) / mp.pi)) + clausen.value / (2 * mp.pi)
    if (int(mp.floor(x / 2)) - 1) % 2:
        value = mp.mpc(value, mp.pi)
    return EvalResult(value, combine_errors(shifted.err_log10, clausen.err_log10),
                      BarnesMethod.REFLECTION.value, shifted.evaluations + clausen.evaluations)


def _log_g_contour(z, ctx: PrecisionContext) -> EvalResult:
    """
    log G(z) = log G(w+1) with w = z - 1, integrating x psi(x+1) - 1 along the polyline
    0 -> si -> si + w -> w, where s is the sign of Im w. The path stays off the real axis
    where psi has its poles.
    """
    mp = ctx.mp
    w = z - 1
    s = 1 if mp.im(w) >= 0 else -1
    vertices = [mp.zero, mp.mpc(0, s), mp.mpc(0, s) + w, w]
    integral = integrate_path(_psi_integrand(ctx), vertices, ctx)
    value = w * (1 - w) / 2 + w / 2 * log_two_pi(ctx) + integral.value
    return EvalResult(value, integral.err_log10, BarnesMethod.PSI_QUADRATURE.value, integral.evaluations)


def log_barnes_g(z, ctx: PrecisionContext) -> EvalResult:
    """
    log G(z) anywhere in the plane.

    Non-positive integers are zeros of G and come back with the zero flag set. Positive
    integers use the superfactorial, the negative real axis the Clausen reflection, the
    right half plane the shifted asymptotic series and the rest the psi contour.
    """
    mp = ctx.mp
    z = to_mp(mp, z)
    if is_nonpositive_integer(mp, z):
        logging.debug("log G dispatcher: %s is a zero of G", mp.nstr(z, 10))
        return EvalResult(None, -ctx.working_digits, BarnesMethod.CLOSED_FORM.value, zero=True)
    if is_real(mp, z):
        x = mp.re(z)
        if mp.isint(x) and x <= CLOSED_FORM_MAX_INTEGER:
            value = mp.log(superfactorial(int(x) - 1))
            return EvalResult(value, -ctx.working_digits, BarnesMethod.CLOSED_FORM.value)
        if x < 0:
            return _log_g_negative_axis(z, ctx)
    if mp.re(z) > 0:
        return _log_g_right_half_plane(z, ctx)
    return _log_g_contour(z, ctx)


def log_g(z, ctx: PrecisionContext):
    """log G(z) as a number, raising ZeroFactor at the zeros of G."""
    result = log_barnes_g(z, ctx)
    if result.zero:
        raise ZeroFactor(f"G vanishes at {ctx.mp.nstr(to_mp(ctx.mp, z), 10)}")
    return result.value


def reflection_sides(z, ctx: PrecisionContext) -> Tuple[object, object]:
    """
    Both sides of log(G(1+z)/G(1-z)) = -z log(sin(pi z)/pi) - Cl2(2 pi z)/(2 pi), 0 < z < 1.
    """
    mp = ctx.mp
    z = to_mp(mp, z)
    if not 0 < z < 1:
        raise DomainError(f"reflection residual is checked for 0 < z < 1, got {mp.nstr(z, 10)}")
    lhs = log_g(1 + z, ctx) - log_g(1 - z, ctx)
    rhs = -z * mp.log(mp.sin(mp.pi * z) / mp.pi) - clausen_cl2(2 * mp.pi * z, ctx).value / (2 * mp.pi)
    return lhs, rhs


def reflection_residual(z, ctx: PrecisionContext):
    """|log(G(1+z)/G(1-z)) + z log(sin(pi z)/pi) + Cl2(2 pi z)/(2 pi)| for 0 < z < 1."""
    lhs, rhs = reflection_sides(z, ctx)
    return abs(lhs - rhs)


def multiplication_rhs(n: int, z, ctx: PrecisionContext):
    """
    log of exp(zeta'(-1)(1-n**2)) n**(n**2 z**2/2 - n z + 5/12) (2 pi)**((n-1)(1-nz)/2)
    prod_{i,j<n} G(z + (i+j)/n).
    """
    if n < 2:
        raise ValueError(f"multiplication order must be at least 2, got {n}")
    mp = ctx.mp
    z = to_mp(mp, z)
    total = zeta_prime_neg(1, ctx) * (1 - n * n) \
        + (n * n * z * z / 2 - n * z + mp.mpf(5) / 12) * mp.log(n) \
        + (n - 1) * (1 - n * z) / 2 * log_two_pi(ctx)
    for i in range(n):
        for j in range(n):
            total += log_g(z + mp.mpf(i + j) / n, ctx)
    return total


def multiplication_residual(n: int, z, ctx: PrecisionContext):
    """|log G(nz) - log RHS| for the multiplication formula of order n."""
    mp = ctx.mp
    z = to_mp(mp, z)
    return abs(log_g(n * z, ctx) - multiplication_rhs(n, z, ctx))


def _special_third(ctx: PrecisionContext):
    mp = ctx.mp
    third = mp.mpf(1) / 3
    sqrt3 = mp.sqrt(3)
    return mp.mpf(1) / 9 + mp.log(3) / 72 + mp.pi / (18 * sqrt3) - 2 * log_gamma(third, ctx).value / 3 \
        - 4 * glaisher_log(ctx) / 3 - trigamma(third, ctx).value / (12 * sqrt3 * mp.pi)


def _special_quarter(ctx: PrecisionContext):
    mp = ctx.mp
    return mp.mpf(3) / 32 - catalan(ctx) / (4 * mp.pi) - 3 * log_gamma(mp.mpf(1) / 4, ctx).value / 4 \
        - 9 * glaisher_log(ctx) / 8


def special_value(key: SpecialValueKey, ctx: PrecisionContext):
    """
    log G at a rational point in closed form over log A, Catalan's constant, log Gamma
    and trigamma values.
    """
    mp = ctx.mp
    if key is SpecialValueKey.HALF:
        return mp.mpf(1) / 8 + mp.log(2) / 24 - mp.log(mp.pi) / 4 - 3 * glaisher_log(ctx) / 2
    if key is SpecialValueKey.QUARTER:
        return _special_quarter(ctx)
    if key is SpecialValueKey.THREE_QUARTERS:
        return _special_quarter(ctx) + catalan(ctx) / (2 * mp.pi) - mp.log(2) / 8 - mp.log(mp.pi) / 4 \
            + log_gamma(mp.mpf(1) / 4, ctx).value
    if key is SpecialValueKey.THIRD:
        return _special_third(ctx)
    if key is SpecialValueKey.TWO_THIRDS:
        sqrt3 = mp.sqrt(3)
        third = mp.mpf(1) / 3
        return _special_third(ctx) - (log_two_pi(ctx) / 3 - mp.log(3) / 6 - log_gamma(third, ctx).value
                                      + (2 * mp.pi ** 2 - 3 * trigamma(third, ctx).value) / (18 * mp.pi * sqrt3))
    raise ValueError(f"no closed form for {key}")


LOG_G_METHODS = {
    BarnesMethod.HERMITE_INTEGRAL.value: log_g_hermite,
    BarnesMethod.BINET_INTEGRAL.value: log_g_binet,
    BarnesMethod.ASYMPTOTIC_SHIFTED.value: lambda z, ctx: _log_g_right_half_plane(to_mp(ctx.mp, z) + 1, ctx),
    BarnesMethod.PSI_QUADRATURE.value: log_g_psi_quadrature,
}
"""Independent evaluations of log G(z+1), keyed by method tag."""


def special_value_argument(key: SpecialValueKey) -> Fraction:
    """The rational point a special value belongs to."""
    return key.value
