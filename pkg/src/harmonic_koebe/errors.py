"""Exception types shared across the library."""


class HarmonicKoebeError(Exception):
    """Base class for all library errors."""


class DomainError(HarmonicKoebeError, ValueError):
    """Argument outside the mathematical domain of the operation."""


class PoleError(HarmonicKoebeError, ArithmeticError):
    """Closed-form evaluation requested at (or too close to) a pole."""


class DivisionByNonUnit(HarmonicKoebeError, ZeroDivisionError):
    """Series division by a series whose constant term is (numerically) zero."""


class InvalidSpec(HarmonicKoebeError, ValueError):
    """Dilatation or class parameters violate their invariants."""


class NormalizationError(HarmonicKoebeError, ValueError):
    """A map or series fails the required normalization at the origin."""


class DivergenceError(HarmonicKoebeError, ArithmeticError):
    """A partial sum exceeded the divergence sentinel threshold."""

    def __init__(self, message: str, partial_sum: float | None = None):
        super().__init__(message)
        self.partial_sum = partial_sum
