"""
Value, context and report types shared by the evaluators, the identity suite and the CLI.
"""
import enum
import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, List, Optional, Union

import mpmath

from barnes_g import defaults


@functools.lru_cache(maxsize=None)
def mp_context(dps: int) -> mpmath.MPContext:
    """
    An mpmath context fixed at `dps` decimal digits. Contexts are shared per precision
    and never have their precision changed after construction.
    """
    context = mpmath.MPContext()
    context.dps = dps
    return context


def default_guard(digits: int) -> int:
    """Guard digits for a request of `digits` decimal digits."""
    return defaults.BASE_GUARD + defaults.GUARD_PER_DECADE * math.ceil(math.log10(digits))


@dataclass(frozen=True)
class PrecisionContext:
    """
    Requested decimal digits plus the guard-digit policy. Threaded explicitly through
    every evaluation; there is no ambient precision.
    """
    digits: int  # requested decimal digits
    guard: Optional[int] = None  # extra working digits, defaults to default_guard(digits)

    def __post_init__(self):
        if self.digits < 1:
            raise ValueError(f"digits must be positive, got {self.digits}")
        if self.guard is None:
            object.__setattr__(self, 'guard', default_guard(self.digits))
        if self.guard < defaults.BASE_GUARD:
            raise ValueError(f"guard must be at least {defaults.BASE_GUARD}, got {self.guard}")

    @property
    def working_digits(self) -> int:
        """Digits carried by intermediate arithmetic."""
        return self.digits + self.guard

    @property
    def mp(self) -> mpmath.MPContext:
        """The mpmath context at working precision."""
        return mp_context(self.working_digits)

    @property
    def target_log10(self) -> int:
        """log10 of the absolute error internal engines aim for."""
        return -(self.digits + self.guard // 2)

    def with_digits(self, digits: int) -> 'PrecisionContext':
        """A context for `digits` digits with the default guard policy."""
        return PrecisionContext(digits)


def combine_errors(*errors: float) -> float:
    """log10 of the sum of absolute errors given as log10 values."""
    finite = [e for e in errors if e != -math.inf]
    if not finite:
        return -math.inf
    top = max(finite)
    return top + math.log10(sum(10 ** (e - top) for e in finite))


def log10_abs(mp: mpmath.MPContext, value) -> float:
    """log10 |value| as a float, -inf for zero."""
    if value == 0:
        return -math.inf
    return float(mp.log10(abs(value)))


class BarnesMethod(enum.Enum):
    """The formula an EvalResult for the G-function came from."""
    HERMITE_INTEGRAL = "hermite-integral"
    BINET_INTEGRAL = "binet-integral"
    ASYMPTOTIC_SHIFTED = "asymptotic"
    PSI_QUADRATURE = "psi-quadrature"
    REFLECTION = "reflection"
    CLOSED_FORM = "closed-form"
    RECURRENCE_SHIFT = "recurrence-shift"


class SpecialValueKey(enum.Enum):
    """Rational arguments with a closed form for log G."""
    HALF = Fraction(1, 2)
    QUARTER = Fraction(1, 4)
    THREE_QUARTERS = Fraction(3, 4)
    THIRD = Fraction(1, 3)
    TWO_THIRDS = Fraction(2, 3)


class GlaisherMethod(enum.Enum):
    """Independent routes to log A."""
    ZETA_PRIME_2 = "zeta-prime-2"
    ODD_ZETA_SERIES = "odd-zeta-series"
    BARNES_HALF = "barnes-half"
    LOG_INTEGRAL = "log-integral"


@dataclass(frozen=True)
class EvalResult:
    """
    A computed value with its heuristic error bound and provenance.
    """
    value: Any  # mpf or mpc; None when `zero` is set
    err_log10: float  # estimated upper bound on log10 |absolute error|
    method: str  # formula tag
    evaluations: int = 0  # integrand / term evaluations spent
    zero: bool = False  # the function value is exactly zero, so its log has no value

    def succeeded(self, digits: int) -> bool:
        """True when the error bound meets the requested digits."""
        return self.err_log10 <= -digits


@dataclass(frozen=True)
class PknCoefficients:
    """
    Coefficients of x**k, k = 0..n-1, in prod_{j=1}^{n-1} (x + j - 1/2).
    """
    n: int
    coeffs: List[Fraction] = field(default_factory=list)

    @property
    def constant_term(self) -> Fraction:
        """Coefficient of x**0."""
        return self.coeffs[0]


# pylint: disable=too-few-public-methods,too-many-instance-attributes
@dataclass
class IdentityReport:
    """
    One identity checked numerically: both sides, the residual and the verdict.
    """
    identity_id: str  # stable key, e.g. "reflection.z=1/3"
    lhs: Union[str, dict]  # decimal rendering of the left-hand side
    rhs: Union[str, dict]  # decimal rendering of the right-hand side
    residual_log10: float  # log10 |lhs - rhs|
    tolerance_log10: float  # pass threshold
    status: str  # "pass", "fail" or "flagged"
    note: str = ""  # extra finding, e.g. a fitted correction factor


# pylint: disable=too-few-public-methods
@dataclass
class OutputRecord:
    """
    A single CLI evaluation result.
    """
    value: Union[str, dict]  # decimal string, or {"re": ..., "im": ...}
    err_log10: float
    method: str
    digits: int
    elapsed_ms: float


def render_value(ctx: PrecisionContext, value) -> Union[str, dict]:
    """
    Decimal rendering at the requested digits: a string for reals and exact integers,
    {"re": ..., "im": ...} for complex values.
    """
    if isinstance(value, (int, Fraction)):
        return str(value)
    mp = ctx.mp
    if value.imag != 0:
        return {"re": mp.nstr(value.real, ctx.digits, strip_zeros=False),
                "im": mp.nstr(value.imag, ctx.digits, strip_zeros=False)}
    return mp.nstr(mp.re(value), ctx.digits, strip_zeros=False)


def compare(identity_id: str, lhs, rhs, ctx: PrecisionContext, tolerance_log10: float,
            flagged: bool = False, note: str = "") -> IdentityReport:
    """
    Build the report for lhs == rhs. Flagged entries keep their residual but never count
    as failures.
    """
    mp = ctx.mp
    residual_log10 = log10_abs(mp, mp.convert(lhs) - mp.convert(rhs)) if not isinstance(lhs, int) \
        else (-math.inf if lhs == rhs else 0.0)
    if flagged:
        status = "flagged"
    else:
        status = "pass" if residual_log10 <= tolerance_log10 else "fail"
    return IdentityReport(identity_id, render_value(ctx, lhs), render_value(ctx, rhs),
                          residual_log10, tolerance_log10, status, note)
