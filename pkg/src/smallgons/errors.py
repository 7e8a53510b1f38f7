class SmallgonError(Exception):
    """Base class for errors raised by this package."""


class InvalidPolygonError(SmallgonError, ValueError):
    pass


class DomainError(SmallgonError, ValueError):
    """An argument lies outside the domain of a formula or constructor."""


class BracketError(SmallgonError):
    """No sign change could be found for a root search."""


class EvaluationError(SmallgonError, ArithmeticError):
    """A residual function returned a non-finite value."""


class InfeasibleError(SmallgonError, ValueError):
    """A trial parameter admits no real solution for an eliminated unknown."""


class SolveError(SmallgonError):
    """A closure equation could not be solved; carries bracket diagnostics."""

    def __init__(self, message: str, bracket: tuple[float, float] | None = None):
        super().__init__(message)
        self.bracket = bracket


class NotAvailableError(SmallgonError, LookupError):
    pass
