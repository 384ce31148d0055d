"""Exception hierarchy for fuzzop-cli.

Library code raises these; command modules turn them into console errors
and exit codes.
"""


class FuzzopError(ValueError):
    """Base class for every error raised by the library."""


class MonotonicityViolation(FuzzopError):
    """A lower endpoint decreases or an upper endpoint increases in the level."""


class CrossingViolation(FuzzopError):
    """The core is empty: lo(1) > hi(1)."""


class DomainError(FuzzopError):
    """An argument lies outside the domain of an operation.

    Attributes:
        index: Position of the offending element when the error comes from a
            vectorized call, otherwise None.
    """

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class NegativeCoefficient(FuzzopError):
    """A convex-combination coefficient is negative."""


class NonPositiveM(FuzzopError):
    """A sigmoidal half-width m is not positive."""


class NonPositiveSpacing(FuzzopError):
    """A Hausdorff sampling spacing is not positive."""


class NonPositiveWidth(FuzzopError):
    """A corpus family width is not positive."""


class MissingAnalyticModulus(FuzzopError):
    """A Jackson bound was requested for a function with no closed-form modulus."""


class UnknownFunction(FuzzopError):
    """No corpus entry is registered under the requested id."""


class UnknownSigma(FuzzopError):
    """No sigmoidal function is registered under the requested name."""


class UnknownMetric(FuzzopError):
    """No metric is registered under the requested name."""
