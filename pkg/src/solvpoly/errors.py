"""Exception types shared across the kernel."""


class SolvPolyError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(SolvPolyError, ValueError):
    """Exponent vectors or polynomials of incompatible generator counts."""


class ZeroPolynomialError(SolvPolyError, ValueError):
    """Degree, leading monomial or leading part of the zero polynomial.

    These quantities are deliberately undefined for 0; callers must test
    for zero first instead of relying on a sentinel.
    """


class InvalidDegreeFunction(SolvPolyError, ValueError):
    """A weight vector with a non-positive entry."""


class NotFilteredError(SolvPolyError, ValueError):
    """A transform was requested for a presentation that is not filtered."""


class LevelTooLowError(SolvPolyError, ValueError):
    """Homogenization level below the element's degree."""


class BudgetExceededError(SolvPolyError, RuntimeError):
    """The rewriting engine ran past its step budget."""

    def __init__(self, steps: int):
        super().__init__(f"rewrite step budget exceeded after {steps} steps")
        self.steps = steps


class AlgebraFileError(SolvPolyError, ValueError):
    """Syntax or validation error in an algebra file or expression.

    Carries a 1-based (line, column) position pointing at the offending
    token.
    """

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, col {column}: {message}")
        self.reason = message
        self.line = line
        self.column = column
