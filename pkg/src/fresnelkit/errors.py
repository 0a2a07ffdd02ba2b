"""Exception types shared across the package."""


class FresnelKitError(Exception):
    """Base class for all package errors."""


class DomainError(FresnelKitError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation exactly at a pole (e.g. gamma at a non-positive integer)."""


class SeriesBudgetError(FresnelKitError, RuntimeError):
    """A truncated series failed to converge within its term budget."""


class QuadratureError(FresnelKitError, RuntimeError):
    """An integration routine could not reach the requested tolerance."""


class EnvelopeError(FresnelKitError, ValueError):
    """A kernel's declared envelope is missing or unusable for the request."""


class UnknownSuiteError(FresnelKitError, KeyError):
    """Verification suite name not registered."""
