"""
Gamma-family and zeta-family functions: log Gamma, digamma, trigamma, Hurwitz zeta and
its s-derivatives at non-positive integers, Riemann zeta values, the Clausen function
Cl2, and the cached fundamental constants built from them.
"""
import logging
import math

from barnes_g import defaults
from barnes_g.combinatorics import bernoulli_number, harmonic
from barnes_g.constants import CONSTANTS
from barnes_g.exceptions import DomainError, InsufficientDecay, NonConvergence, Pole, PoleAtOne
from barnes_g.model import EvalResult, PrecisionContext, log10_abs
from barnes_g.quadrature import euler_maclaurin_tail, integrate_semi_infinite, sum_series


def to_mp(mp, value):
    """Convert ints, Fractions, strings and mpmath numbers into `mp` numbers."""
    if hasattr(value, 'numerator') and hasattr(value, 'denominator') and not isinstance(value, int):
        return mp.mpf(value.numerator) / value.denominator
    return mp.convert(value)


def is_real(mp, z) -> bool:
    """True when z has no imaginary part."""
    return mp.im(z) == 0


def is_nonpositive_integer(mp, z) -> bool:
    """True for 0, -1, -2, ..."""
    return is_real(mp, z) and mp.re(z) <= 0 and mp.isint(mp.re(z))


def bose_kernel(mp, x):
    """1/(exp(2 pi x) - 1)"""
    return 1 / mp.expm1(2 * mp.pi * x)


def fermi_kernel(mp, x):
    """1/(exp(2 pi x) + 1)"""
    return 1 / (mp.exp(2 * mp.pi * x) + 1)


def real_if_real_input(mp, z, value):
    """Drop the imaginary part when z was real."""
    return mp.re(value) if is_real(mp, z) else value


def _near_origin(mp, z) -> float:
    """Inner quadrature scale for kernels containing x**2 + z**2."""
    return min(float(abs(z)), 1.0)


def log_two_pi(ctx: PrecisionContext):
    """log(2 pi), cached."""
    return CONSTANTS.get("log_two_pi", ctx, lambda c: c.mp.log(2 * c.mp.pi))


def zeta_prime_0(ctx: PrecisionContext):
    """zeta'(0) = -log(2 pi)/2, cached."""
    return CONSTANTS.get("zeta_prime_0", ctx, lambda c: -log_two_pi(c) / 2)


def euler_gamma(ctx: PrecisionContext):
    """Euler-Mascheroni constant as -psi(1), cached."""
    return CONSTANTS.get("euler_gamma", ctx, lambda c: -digamma(1, c).value)


def log_gamma(z, ctx: PrecisionContext) -> EvalResult:
    """
    Principal-branch log Gamma(z) by the second Binet formula

        log Gamma(w) = (w - 1/2) log w - w + log(2 pi)/2 + 2 int_0^inf atan(x/w)/(exp(2 pi x) - 1) dx,

    after shifting w = z + m so that Re w >= 1.
    :param z: argument, not a non-positive integer
    :param ctx: precision context
    :return: log Gamma(z)
    """
    mp = ctx.mp
    z = to_mp(mp, z)
    if is_nonpositive_integer(mp, z):
        raise Pole(f"log Gamma has a pole at {mp.nstr(z, 10)}")
    shift = max(0, math.ceil(1 - float(mp.re(z))))
    w = z + shift
    integral = integrate_semi_infinite(
        lambda x: mp.atan(x / w) * bose_kernel(mp, x),
        2 * math.pi, ctx, inner_scale=_near_origin(mp, w))
    value = (w - mp.mpf(1) / 2) * mp.log(w) - w + log_two_pi(ctx) / 2 + 2 * integral.value
    for j in range(shift):
        value -= mp.log(z + j)
    value = real_if_real_input(mp, z, value) if mp.re(z) > 0 else value
    return EvalResult(value, integral.err_log10 + math.log10(2), "binet-log-gamma", integral.evaluations)


def _asymptotic_shift(mp, z, radius: float) -> int:
    """Smallest m >= 0 with |z + m| >= radius."""
    im = abs(float(mp.im(z)))
    if im >= radius:
        return 0
    return max(0, math.ceil(math.sqrt(radius * radius - im * im) - float(mp.re(z))))


def digamma(z, ctx: PrecisionContext) -> EvalResult:
    """
    psi(z) from the Bernoulli asymptotic series after an upward shift, with reflection
    psi(z) = psi(1 - z) - pi cot(pi z) for Re z < 1/2.
    """
    mp = ctx.mp
    z = to_mp(mp, z)
    if is_nonpositive_integer(mp, z):
        raise Pole(f"digamma has a pole at {mp.nstr(z, 10)}")
    if mp.re(z) < 0.5:
        reflected = digamma(1 - z, ctx)
        value = reflected.value - mp.pi * mp.cot(mp.pi * z)
        return EvalResult(value, reflected.err_log10, reflected.method, reflected.evaluations)

    radius = max(10.0, 0.4 * ctx.working_digits)
    shift = _asymptotic_shift(mp, z, radius)
    w = z + shift
    tolerance = mp.mpf(10) ** -ctx.working_digits
    value = mp.log(w) - 1 / (2 * w)
    w2 = w * w
    power = w2
    size = mp.inf
    for k in range(1, defaults.ASYMPTOTIC_TERM_CAP + 1):
        b_2k = bernoulli_number(2 * k)
        term = to_mp(mp, b_2k) / (2 * k * power)
        if abs(term) > size:
            raise InsufficientDecay(f"digamma series diverges at |w| = {mp.nstr(abs(w), 6)}")
        value -= term
        size = abs(term)
        if size < tolerance:
            break
        power *= w2
    else:
        raise NonConvergence(f"digamma series needs more than {defaults.ASYMPTOTIC_TERM_CAP} terms")
    for j in range(shift):
        value -= 1 / (z + j)
    value = real_if_real_input(mp, z, value)
    return EvalResult(value, max(log10_abs(mp, size), -ctx.working_digits),
                      "asymptotic-digamma", k + shift)


def trigamma(z, ctx: PrecisionContext) -> EvalResult:
    """psi'(z) = zeta(2, z), shifted so the Hurwitz argument has Re >= 1."""
    mp = ctx.mp
    z = to_mp(mp, z)
    if is_nonpositive_integer(mp, z):
        raise Pole(f"trigamma has a pole at {mp.nstr(z, 10)}")
    shift = max(0, math.ceil(1 - float(mp.re(z))))
    result = hurwitz_zeta(2, z + shift, ctx)
    value = result.value
    for j in range(shift):
        value += 1 / (z + j) ** 2
    return EvalResult(value, result.err_log10, "hurwitz-trigamma", result.evaluations)


def hurwitz_zeta(s, z, ctx: PrecisionContext) -> EvalResult:
    """
    zeta(s, z) for real s != 1 and Re z > 0 by the Hermite integral

        zeta(s, z) = z**-s/2 + z**(1-s)/(s-1)
                     + 2 int_0^inf sin(s atan(x/z)) (x**2 + z**2)**(-s/2) / (exp(2 pi x) - 1) dx.

    For complex z the integrand is ((z - ix)**-s - (z + ix)**-s)/(2i), which reduces to the
    form above on the real axis.
    """
    mp = ctx.mp
    s = to_mp(mp, s)
    z = to_mp(mp, z)
    if s == 1:
        raise PoleAtOne("zeta(s, z) has a pole at s = 1")
    if mp.re(z) <= 0:
        raise DomainError(f"Hermite integral needs Re z > 0, got z = {mp.nstr(z, 10)}")

    if is_real(mp, z):
        z = mp.re(z)

        def integrand(x):
            return mp.sin(s * mp.atan(x / z)) * (x * x + z * z) ** (-s / 2) * bose_kernel(mp, x)
    else:
        def integrand(x):
            return ((z - 1j * x) ** -s - (z + 1j * x) ** -s) / 2j * bose_kernel(mp, x)

    integral = integrate_semi_infinite(integrand, 2 * math.pi, ctx,
                                       growth=max(0.0, -float(s)), inner_scale=_near_origin(mp, z))
    value = z ** -s / 2 + z ** (1 - s) / (s - 1) + 2 * integral.value
    return EvalResult(value, integral.err_log10 + math.log10(2), "hermite-zeta", integral.evaluations)


def hurwitz_zeta_prime_neg(k: int, z, ctx: PrecisionContext) -> EvalResult:
    """
    d/ds zeta(s, z) at s = -k, k >= 0, by differentiating the Hermite integral:

        zeta'(-k, z) = -z**k log z/2 + z**(k+1) log z/(k+1) - z**(k+1)/(k+1)**2
                       + 2 int_0^inf [Re (z+ix)**k atan(x/z) + Im (z+ix)**k log(x**2+z**2)/2] K(x) dx

    with K(x) = 1/(exp(2 pi x) - 1). Re and Im are taken with respect to x, so complex z
    uses the symmetric combinations of (z + ix)**k and (z - ix)**k.
    """
    if k < 0:
        raise ValueError(f"order must be non-negative, got {k}")
    mp = ctx.mp
    z = to_mp(mp, z)
    if mp.re(z) <= 0:
        raise DomainError(f"Hermite integral needs Re z > 0, got z = {mp.nstr(z, 10)}")
    real_z = is_real(mp, z)
    if real_z:
        z = mp.re(z)

    def integrand(x):
        plus = (z + 1j * x) ** k
        if real_z:
            even, odd = mp.re(plus), mp.im(plus)
            log_sq = mp.log(x * x + z * z)
        else:
            minus = (z - 1j * x) ** k
            even, odd = (plus + minus) / 2, (plus - minus) / 2j
            log_sq = mp.log(z + 1j * x) + mp.log(z - 1j * x)
        return (even * mp.atan(x / z) + odd * log_sq / 2) * bose_kernel(mp, x)

    integral = integrate_semi_infinite(integrand, 2 * math.pi, ctx, growth=k,
                                       inner_scale=_near_origin(mp, z))
    log_z = mp.log(z)
    value = -z ** k * log_z / 2 + z ** (k + 1) * log_z / (k + 1) - z ** (k + 1) / (k + 1) ** 2 \
        + 2 * integral.value
    return EvalResult(value, integral.err_log10 + math.log10(2), "hermite-zeta-derivative",
                      integral.evaluations)


def hurwitz_zeta_prime_neg1(z, ctx: PrecisionContext) -> EvalResult:
    """
    zeta'(-1, z) = z**2 log z/2 - z**2/4 - z log z/2 + 2z int atan(x/z) K + int x log(x**2+z**2) K,
    with both integrals taken under one quadrature.
    """
    return hurwitz_zeta_prime_neg(1, z, ctx)


def riemann_zeta(s, ctx: PrecisionContext) -> EvalResult:
    """zeta(s) = zeta(s, 1) for real s != 1."""
    mp = ctx.mp
    if to_mp(mp, s) == 1:
        raise PoleAtOne("zeta(s) has a pole at s = 1")
    return hurwitz_zeta(s, 1, ctx)


def _euler_maclaurin_cutoff(ctx: PrecisionContext) -> int:
    """Cutoff where Euler-Maclaurin corrections for power sums reach working precision."""
    return max(10, math.ceil(0.5 * ctx.working_digits))


def zeta_minus_one(s, ctx: PrecisionContext) -> EvalResult:
    """
    zeta(s) - 1 = sum_{j >= 2} j**-s for real s > 1.

    Uses the plain series with the integral tail bound N**(1-s)/(s-1) when that
    converges within the term cap, otherwise explicit terms below a cutoff plus an
    Euler-Maclaurin tail.
    """
    mp = ctx.mp
    s = to_mp(mp, s)
    if s <= 1:
        raise DomainError(f"the power series for zeta(s) - 1 needs s > 1, got {mp.nstr(s, 10)}")
    exponent = float(s) - 1
    needed_log10 = (-ctx.target_log10 - math.log10(exponent)) / exponent
    if needed_log10 < math.log10(defaults.SERIES_TERM_CAP):
        return sum_series(lambda j: mp.mpf(j) ** -s,
                          lambda n: mp.mpf(n) ** (1 - s) / (s - 1), ctx, start=2)
    cutoff = _euler_maclaurin_cutoff(ctx)
    tail, last = euler_maclaurin_tail(s, 0, cutoff, ctx)
    head = mp.fsum(mp.mpf(j) ** -s for j in range(2, cutoff))
    err_log10 = max(float(mp.log10(last)) if last else -ctx.working_digits, -ctx.working_digits)
    return EvalResult(head + tail, err_log10, "euler-maclaurin", cutoff)


def zeta_minus_one_integral(s, ctx: PrecisionContext) -> EvalResult:
    """
    zeta(s) - 1 = (1/Gamma(s)) int_0^inf x**(s-1) / (exp(x) (exp(x) - 1)) dx for s > 1.
    """
    mp = ctx.mp
    s = to_mp(mp, s)
    if s <= 1:
        raise DomainError(f"the integral for zeta(s) - 1 needs s > 1, got {mp.nstr(s, 10)}")
    integral = integrate_semi_infinite(
        lambda x: x ** (s - 1) * mp.exp(-x) / mp.expm1(x),
        2.0, ctx, growth=float(s) - 1, segment=2 * math.pi)
    gamma_s = mp.factorial(int(s) - 1) if mp.isint(s) else mp.exp(log_gamma(s, ctx).value)
    value = integral.value / gamma_s
    return EvalResult(value, integral.err_log10 - float(mp.log10(gamma_s)), "zeta-integral",
                      integral.evaluations)


def zeta_prime_positive(s: int, ctx: PrecisionContext) -> EvalResult:
    """
    zeta'(s) = -sum_{j >= 2} log j / j**s for integer s >= 2, by Euler-Maclaurin summation
    with the remainder bounded by the last correction.
    """
    if s < 2:
        raise DomainError(f"zeta'(s) by summation needs integer s >= 2, got {s}")
    mp = ctx.mp
    cutoff = _euler_maclaurin_cutoff(ctx)
    tail, last = euler_maclaurin_tail(s, 1, cutoff, ctx)
    head = mp.fsum(mp.log(j) / mp.mpf(j) ** s for j in range(2, cutoff))
    err_log10 = max(float(mp.log10(last)) if last else -ctx.working_digits, -ctx.working_digits)
    return EvalResult(-(head + tail), err_log10, "euler-maclaurin", cutoff)


def zeta_prime_2(ctx: PrecisionContext):
    """zeta'(2), cached."""
    return CONSTANTS.get("zeta_prime_2", ctx, lambda c: zeta_prime_positive(2, c).value)


def zeta_prime_neg1_integral(ctx: PrecisionContext) -> EvalResult:
    """zeta'(-1) = 2 int_0^inf x log x / (exp(2 pi x) - 1) dx."""
    mp = ctx.mp
    integral = integrate_semi_infinite(lambda x: x * mp.log(x) * bose_kernel(mp, x), 2 * math.pi, ctx)
    return EvalResult(2 * integral.value, integral.err_log10 + math.log10(2), "zeta-prime-integral",
                      integral.evaluations)


def zeta_prime_neg_functional(k: int, ctx: PrecisionContext):
    """
    zeta'(-k) for odd k >= 1 from the logarithmic derivative of the functional equation:

        zeta'(-k) = zeta(-k) (log 2 pi - psi(1 + k) - zeta'(k+1)/zeta(k+1)),

    with zeta(-k) = -B_{k+1}/(k+1) and psi(1 + k) = H_k - gamma.
    """
    if k < 1 or k % 2 == 0:
        raise ValueError(f"functional-equation route serves odd k >= 1, got {k}")
    mp = ctx.mp
    zeta_neg = -to_mp(mp, bernoulli_number(k + 1)) / (k + 1)
    psi = to_mp(mp, harmonic(k)) - euler_gamma(ctx)
    ratio = zeta_prime_positive(k + 1, ctx).value / riemann_zeta(k + 1, ctx).value
    return zeta_neg * (log_two_pi(ctx) - psi - ratio)


def _compute_zeta_prime_neg(k: int, ctx: PrecisionContext):
    mp = ctx.mp
    if k == 1:
        return zeta_prime_neg1_integral(ctx).value
    if k % 2 == 0:
        m = k // 2
        zeta_odd = 1 + zeta_minus_one(k + 1, ctx).value
        return (-1) ** m * mp.factorial(k) * zeta_odd / (2 * (2 * mp.pi) ** k)
    return zeta_prime_neg_functional(k, ctx)


def zeta_prime_neg(k: int, ctx: PrecisionContext):
    """
    zeta'(-k) for k >= 0, cached. k = 1 comes from its integral, even k from
    zeta(k+1), odd k >= 3 from the functional equation.
    """
    if k < 0:
        raise ValueError(f"order must be non-negative, got {k}")
    if k == 0:
        return zeta_prime_0(ctx)
    return CONSTANTS.get(f"zeta_prime_neg({k})", ctx, lambda c: _compute_zeta_prime_neg(k, c))


def glaisher_log(ctx: PrecisionContext):
    """log A = 1/12 - zeta'(-1), cached."""
    return CONSTANTS.get("glaisher_log", ctx, lambda c: c.mp.mpf(1) / 12 - zeta_prime_neg(1, c))


def clausen_cl2(theta, ctx: PrecisionContext) -> EvalResult:
    """
    Cl2(theta) = sum_{k >= 1} sin(k theta)/k**2.

    theta is reduced to [0, pi] by periodicity and oddness; there the singular part is
    taken in closed form:

        Cl2(t) = t - t log t + sum_{k >= 1} |B_2k| t**(2k+1) / (2k (2k+1) (2k)!).
    """
    mp = ctx.mp
    two_pi = 2 * mp.pi
    t = mp.fmod(to_mp(mp, theta), two_pi)
    if t < 0:
        t += two_pi
    sign = 1
    if t > mp.pi:
        sign = -1
        t = two_pi - t
    if t == 0 or t == mp.pi:
        return EvalResult(mp.zero, -ctx.working_digits, "clausen-series", 0)
    ratio = (t / two_pi) ** 2

    def term(k):
        b_2k = bernoulli_number(2 * k)
        return abs(to_mp(mp, b_2k)) * t ** (2 * k + 1) / (2 * k * (2 * k + 1) * mp.factorial(2 * k))

    def tail_bound(n):
        # |B_2k|/(2k)! <= 2 zeta(2)/(2 pi)**2k
        return 3.3 * t * ratio ** (n + 1) / ((2 * n + 2) * (2 * n + 3) * (1 - ratio))

    series = sum_series(term, tail_bound, ctx)
    value = sign * (t - t * mp.log(t) + series.value)
    logging.debug("Cl2 at reduced angle %s: %s terms", mp.nstr(t, 8), series.evaluations)
    return EvalResult(value, series.err_log10, "clausen-series", series.evaluations)


def catalan(ctx: PrecisionContext):
    """Catalan's constant as Cl2(pi/2), cached."""
    return CONSTANTS.get("catalan", ctx, lambda c: clausen_cl2(c.mp.pi / 2, c).value)


def log_gamma_reflection_residual(z, ctx: PrecisionContext):
    """|log Gamma(z) + log Gamma(1-z) - log(pi/sin(pi z))| for real 0 < z < 1."""
    mp = ctx.mp
    z = to_mp(mp, z)
    lhs = log_gamma(z, ctx).value + log_gamma(1 - z, ctx).value
    rhs = mp.log(mp.pi / mp.sin(mp.pi * z))
    return abs(lhs - rhs)
