"""
Numerical integration and summation: tanh-sinh (double exponential) quadrature of semi-infinite
integrals with exponentially decaying kernels, and Gauss-Legendre quadrature along
finite polygonal paths in the complex plane, tail-bounded series and Euler-Maclaurin tails.
"""
import functools
import logging
import math
from typing import Callable, List, Sequence, Tuple

from barnes_g import defaults
from barnes_g.constants import CONSTANTS
from barnes_g.exceptions import NonConvergence
from barnes_g.model import EvalResult, PrecisionContext, combine_errors, log10_abs, mp_context


@functools.lru_cache(maxsize=None)
def tanh_sinh_nodes(dps: int, level: int) -> Tuple[Tuple[object, object], ...]:
    """
    Nodes first introduced at `level` of the tanh-sinh rule on [-1, 1], for t >= 0.

    Each node is a pair (d, w): d = 1 - tanh(pi/2 sinh t) is the distance from the
    endpoint, computed without cancellation, and w = (pi/2) cosh t / cosh^2(pi/2 sinh t)
    is the weight before multiplication by the step h = 2**-level. Level 0 holds every
    integer t including t = 0; level m > 0 holds the odd multiples of 2**-m.
    """
    mp = mp_context(dps)
    # beyond t_max the endpoint distance is below 10**-dps
    t_max = math.asinh(dps * math.log(10) / math.pi) + 0.5
    h = mp.ldexp(1, -level)
    k_max = math.ceil(t_max * 2 ** level)
    start, step = (0, 1) if level == 0 else (1, 2)
    nodes = []
    for k in range(start, k_max + 1, step):
        t = k * h
        e = mp.exp(-mp.pi * mp.sinh(t))  # exp(-2u), u = pi/2 sinh t
        d = 2 * e / (1 + e)
        w = mp.pi / 2 * mp.cosh(t) * 4 * e / (1 + e) ** 2
        nodes.append((d, w))
    return tuple(nodes)


def tanh_sinh_segment(integrand: Callable, a, b, ctx: PrecisionContext, tolerance,
                      max_level: int = defaults.QUADRATURE_MAX_LEVEL) -> Tuple[object, object, int, int]:
    """
    Integrate over the finite segment [a, b] by tanh-sinh quadrature, halving the step
    until two successive levels agree within `tolerance`.
    :return: (value, last inter-level difference, evaluations, final level)
    """
    mp = ctx.mp
    half = (b - a) / 2
    raw = mp.zero
    previous = None
    evaluations = 0
    for level in range(max_level + 1):
        for index, (d, w) in enumerate(tanh_sinh_nodes(ctx.working_digits, level)):
            if level == 0 and index == 0:
                raw += w * integrand(a + half)
                evaluations += 1
            else:
                offset = half * d
                raw += w * (integrand(a + offset) + integrand(b - offset))
                evaluations += 2
        estimate = raw * half * mp.ldexp(1, -level)
        if previous is not None and level >= defaults.QUADRATURE_MIN_LEVEL:
            difference = abs(estimate - previous)
            if difference <= tolerance:
                return estimate, difference, evaluations, level
        previous = estimate
    raise NonConvergence(
        f"tanh-sinh on [{mp.nstr(a, 8)}, {mp.nstr(b, 8)}] did not settle within level {max_level}")


def reported_error(mp, difference, evaluations: int, ctx: PrecisionContext) -> float:
    """
    log10 error bound of a quadrature: the last refinement difference plus the rounding
    that `evaluations` terms accumulate at working precision.
    """
    rounding = -ctx.working_digits + math.log10(max(evaluations, 1))
    return combine_errors(log10_abs(mp, difference), rounding)


def truncation_point(decay_hint: float, ctx: PrecisionContext, growth: float = 0.0) -> float:
    """
    Smallest x with x**growth * exp(-decay_hint * x) below 10**-(working digits).
    """
    budget = ctx.working_digits * math.log(10)
    x_max = budget / decay_hint
    for _ in range(8):
        x_max = (budget + growth * math.log(max(x_max, 1.0))) / decay_hint
    return x_max + 1.0


def breakpoints(x_max: float, segment: float, inner_scale: float) -> List[float]:
    """
    Subdivision of [0, x_max]: a geometric ramp up to `inner_scale`, then pieces of
    width `segment`. Pieces are kept short relative to the distance to the nearest
    complex singularity of the kernel.
    """
    inner = min(inner_scale, segment)
    points = [0.0, inner / 4, inner / 2, inner]
    x = inner
    while 2 * x < segment:
        x *= 2
        points.append(x)
    while points[-1] < x_max:
        points.append(points[-1] + segment)
    return points


def integrate_semi_infinite(integrand: Callable, decay_hint: float, ctx: PrecisionContext,
                            growth: float = 0.0, segment: float = 1.0, inner_scale: float = 1.0,
                            max_level: int = defaults.QUADRATURE_MAX_LEVEL) -> EvalResult:
    """
    Integrate `integrand` over (0, inf) for kernels decaying like exp(-decay_hint * x),
    possibly times a power x**growth.

    The domain is truncated where the kernel falls below the working precision and
    split into pieces, each integrated by tanh-sinh quadrature with level doubling.
    :param integrand: callable on mpf arguments, may return mpf or mpc
    :param decay_hint: exponential decay rate of the integrand
    :param ctx: precision context
    :param growth: polynomial growth degree of the integrand, moves the cut-off outwards
    :param segment: piece width, at most the distance to the kernel's complex poles
    :param inner_scale: scale of the integrand's features near the origin
    :param max_level: finest level tried before giving up
    :return: the integral with err_log10 taken from the final inter-level differences
    """
    mp = ctx.mp
    x_max = truncation_point(decay_hint, ctx, growth)
    points = breakpoints(x_max, segment, inner_scale)
    pieces = len(points) - 1
    tolerance = mp.mpf(10) ** ctx.target_log10 / pieces
    total = mp.zero
    difference = mp.zero
    evaluations = 0
    deepest = 0
    for left, right in zip(points, points[1:]):
        value, diff, count, level = tanh_sinh_segment(
            integrand, mp.mpf(left), mp.mpf(right), ctx, tolerance, max_level)
        total += value
        difference += diff
        evaluations += count
        deepest = max(deepest, level)
    logging.debug("tanh-sinh: %s pieces up to x=%.2f, %s evaluations, deepest level %s",
                  pieces, x_max, evaluations, deepest)
    return EvalResult(total, reported_error(mp, difference, evaluations, ctx), "tanh-sinh", evaluations)


def path_points(vertices: Sequence, piece_length: float, ctx: PrecisionContext) -> list:
    """
    The polyline through `vertices` with each edge cut into pieces no longer than
    `piece_length`.
    """
    mp = ctx.mp
    points = [mp.convert(vertices[0])]
    for start, end in zip(vertices, vertices[1:]):
        start, end = mp.convert(start), mp.convert(end)
        length = abs(end - start)
        if length == 0:
            continue
        count = max(1, int(mp.ceil(length / piece_length)))
        points.extend(start + (end - start) * j / count for j in range(1, count + 1))
    return points


def integrate_path(integrand: Callable, vertices: Sequence, ctx: PrecisionContext,
                   piece_length: float = defaults.PATH_PIECE_LENGTH) -> EvalResult:
    """
    Integrate along the polygonal path through `vertices` by Gauss-Legendre quadrature
    on each piece.
    """
    mp = ctx.mp
    counter = [0]

    def counted(x):
        counter[0] += 1
        return integrand(x)

    points = path_points(vertices, piece_length, ctx)
    if len(points) < 2:
        return EvalResult(mp.zero, -ctx.working_digits, "gauss-legendre", 0)
    value, error = mp.quad(counted, points, method='gauss-legendre', error=True,
                           maxdegree=defaults.GAUSS_LEGENDRE_MAX_DEGREE)
    err_log10 = reported_error(mp, error, counter[0], ctx)
    if err_log10 > -ctx.digits:
        raise NonConvergence(f"Gauss-Legendre path quadrature stalled at 10**{err_log10:.1f}")
    return EvalResult(value, err_log10, "gauss-legendre", counter[0])


def sum_series(term: Callable[[int], object], tail_bound: Callable[[int], object], ctx: PrecisionContext,
               start: int = 1, tail_estimate: Callable[[int], object] = None,
               cap: int = defaults.SERIES_TERM_CAP) -> EvalResult:
    """
    Sum term(start) + term(start+1) + ... up to the first N with tail_bound(N) below
    the target tolerance.
    :param term: the k-th term
    :param tail_bound: bound on |sum_{k>N} term(k) - tail_estimate(N)|
    :param ctx: precision context
    :param start: first index
    :param tail_estimate: optional closed-form approximation of the tail beyond N
    :param cap: largest number of terms tried
    :return: the sum, with err_log10 from the final tail bound
    """
    mp = ctx.mp
    tolerance = mp.mpf(10) ** ctx.target_log10
    total = mp.zero
    index = start
    while True:
        total += term(index)
        bound = mp.convert(tail_bound(index))
        if bound < tolerance:
            break
        if index - start + 1 >= cap:
            raise NonConvergence(f"series tail still {mp.nstr(bound, 5)} after {cap} terms")
        index += 1
    if tail_estimate is not None:
        total += tail_estimate(index)
    terms = index - start + 1
    logging.debug("sum_series: %s terms, tail bound %s", terms, mp.nstr(bound, 5))
    err_log10 = max(log10_abs(mp, bound), -ctx.working_digits)
    return EvalResult(total, err_log10, "series", terms)


def euler_maclaurin_tail(s, log_power: int, cutoff: int, ctx: PrecisionContext) -> Tuple[object, object]:
    """
    Tail sum_{j >= cutoff} j**-s (log j)**log_power for real s > 1 and log_power in {0, 1},
    by the Euler-Maclaurin formula.

    Derivatives of x**-s (a log x + b) keep the same shape:
    f^(r)(x) = x**(-s-r) (a_r log x + b_r), a_{r+1} = -(s+r) a_r, b_{r+1} = -(s+r) b_r + a_r.
    :return: (value, magnitude of the last correction used)
    """
    mp = ctx.mp
    s = mp.convert(s)
    n = mp.mpf(cutoff)
    log_n = mp.log(n)
    tolerance = mp.mpf(10) ** -ctx.working_digits
    if log_power == 0:
        integral = n ** (1 - s) / (s - 1)
        a_r, b_r = mp.zero, mp.one
    elif log_power == 1:
        integral = n ** (1 - s) * (log_n / (s - 1) + 1 / (s - 1) ** 2)
        a_r, b_r = mp.one, mp.zero
    else:
        raise ValueError(f"log_power must be 0 or 1, got {log_power}")
    total = integral + n ** -s * (a_r * log_n + b_r) / 2
    previous = mp.inf
    r = 0
    k = 1
    while True:
        # advance the derivative to order 2k-1
        while r < 2 * k - 1:
            a_r, b_r = -(s + r) * a_r, -(s + r) * b_r + a_r
            r += 1
        b_2k = CONSTANTS.bernoulli(2 * k)
        correction = mp.mpf(b_2k.numerator) / b_2k.denominator / mp.factorial(2 * k) \
            * n ** (-s - r) * (a_r * log_n + b_r)
        size = abs(correction)
        if size > previous:
            raise NonConvergence(f"Euler-Maclaurin terms diverge before reaching tolerance at cutoff {cutoff}")
        total -= correction
        if size < tolerance:
            return total, size
        previous = size
        k += 1
