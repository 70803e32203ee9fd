"""Exception types shared across the package."""


class SupralapError(Exception):
    """Base class for all package-specific errors."""


class ZeroDegreeError(SupralapError):
    """A node has degree zero where a positive degree is required."""


class NotSymmetricError(SupralapError):
    """A matrix expected to be symmetric is not, beyond tolerance."""


class DimensionMismatchError(SupralapError):
    """Operand shapes are incompatible."""


class BadDimensionError(SupralapError):
    """A size parameter disagrees with the object it must match."""


class IndexOutOfRangeError(SupralapError):
    """A block or layer index lies outside its valid range."""


class BadLengthError(SupralapError):
    """A vector length is not divisible into the expected blocks."""


class NoConvergenceError(SupralapError):
    """The eigensolver exceeded its iteration cap."""

    def __init__(self, order: int, cap: int):
        self.order = order
        self.cap = cap
        super().__init__(
            f"eigensolver did not converge for matrix of order {order} "
            f"within {cap} sweeps per eigenvalue"
        )


class GenerationFailedError(SupralapError):
    """A random-graph generator exhausted its rejection budget."""


class InfeasibleCalibrationError(SupralapError):
    """Requested generator parameters force an edge probability outside (0, 1)."""


class MethodMismatchError(SupralapError):
    """The requested computation method does not apply to the given input."""
