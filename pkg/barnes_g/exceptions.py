"""
Exceptions for the special function evaluators.
"""


class SpecialFunctionError(Exception):
    """There was a problem evaluating a special function."""


class NonConvergence(SpecialFunctionError):
    """A quadrature or series did not reach the requested precision within its configured limit."""


class Pole(SpecialFunctionError):
    """The argument is a pole of the function (a non-positive integer)."""


class PoleAtOne(SpecialFunctionError):
    """The zeta function was asked for its value at s = 1."""


class DomainError(SpecialFunctionError):
    """The argument lies outside the region where the representation is valid."""


class InsufficientDecay(SpecialFunctionError):
    """No truncation of the asymptotic series reaches the tolerance at this argument."""


class PathCrossesPole(SpecialFunctionError):
    """The integration path meets a pole of the digamma function."""


class ZeroFactor(SpecialFunctionError):
    """A G-function factor sits on a zero of G, so its logarithm is undefined."""
