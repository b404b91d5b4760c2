"""Exception hierarchy for rootbound."""


class RootBoundError(Exception):
    """Base class for all errors raised by this package."""


class InvalidPolynomialError(RootBoundError, ValueError):
    """Coefficient data does not describe a polynomial of degree >= 1."""


class DegreeError(RootBoundError, ValueError):
    """The operation is not defined for the polynomial's degree."""


class DomainError(RootBoundError, ValueError):
    """A scalar argument lies outside its admissible range."""


class ConfigurationError(RootBoundError, ValueError):
    """Unknown option name, e.g. an unrecognised coefficient distribution."""


class CoefficientRangeError(RootBoundError, OverflowError):
    """Coefficient magnitudes would overflow binary64 intermediates."""


class UnsupportedGeometryError(RootBoundError, ValueError):
    """Oval with two distinct non-zero foci."""
