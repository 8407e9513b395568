"""Exception hierarchy.

Every error carries an ``exit_code`` so the command-line driver can map
failures onto distinct process exit statuses (1 usage, 2 domain, 3 numeric).
"""


class ApproxError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 3


class UsageError(ApproxError):
    exit_code = 1


class DomainError(ApproxError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""

    exit_code = 2


class ZeroConstantTerm(DomainError):
    """``f(0) == 0`` where a nonzero constant term is required."""


class ZeroFunction(DomainError):
    """The target function is identically zero."""


class UnsupportedAlpha(DomainError):
    """No closed form is known for the requested space parameter."""


class RootInsideDisk(DomainError):
    """A root of the target lies strictly inside the unit disk."""


class InsufficientData(DomainError):
    """Too few records to compute a summary statistic."""


class NumericError(ApproxError, ArithmeticError):
    exit_code = 3


class NotPositiveDefinite(NumericError):
    """A Cholesky pivot collapsed below the relative threshold."""


class SingularM(NumericError):
    """The determinant of the reduced normal matrix is numerically zero."""


class ConvergenceFailure(NumericError):
    """The simultaneous root iteration did not converge after all restarts."""
