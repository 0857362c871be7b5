"""Exception types raised by eulermat."""


class EulerMatError(Exception):
    """Base class for all library errors."""


class ZeroAlphaError(EulerMatError, ValueError):
    """The class parameter alpha was zero."""


class AlphaMismatchError(EulerMatError, ValueError):
    """Structured product requested between matrices with different alpha."""


class SingularMatrixError(EulerMatError, ZeroDivisionError):
    """Inverse requested for a matrix with zero determinant."""


class MatrixOverflowError(EulerMatError, OverflowError):
    """A result entry would not be finite in double precision."""


class NoConvergenceError(EulerMatError, ArithmeticError):
    """Truncated series hit its term budget before the cutoff."""


class EmptyChainError(EulerMatError, ValueError):
    """A duct chain had no segments."""


class EmptySweepError(EulerMatError, ValueError):
    """A frequency sweep had no frequencies."""
