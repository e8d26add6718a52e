"""Exception types shared across the package."""


class WeylGrowthError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(WeylGrowthError, ValueError):
    """Malformed input text (Cartan file, fixtures file, or polynomial)."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ValidationError(WeylGrowthError, ValueError):
    """Structurally well-formed input that violates a domain condition.

    For Cartan matrices the message names the offending entry (i, j),
    1-based.
    """


class UnsupportedTypeError(WeylGrowthError, ValueError):
    """Requested family/rank combination is outside the supported tables."""


class BudgetExceededError(WeylGrowthError, RuntimeError):
    """Enumeration grew past the caller-supplied state budget."""


class ConsistencyError(WeylGrowthError, RuntimeError):
    """An internal invariant failed; indicates a bug or an invalid input
    presented as a trusted value (e.g. a weight that is not an orbit point).
    """
