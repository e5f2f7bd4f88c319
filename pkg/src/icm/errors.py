"""Exceptions shared across the package."""


class DimensionMismatchError(ValueError):
    """Operands live in ambient spaces of different dimension."""


class NotStarMultipleError(ValueError):
    """Cancellation was requested against an ideal that is not a star factor."""


class BudgetExceededError(RuntimeError):
    """A bounded search ran out of budget before reaching an answer.

    Distinct from a negative answer: callers must not treat this as "false".
    """

    def __init__(self, message, examined=None):
        super().__init__(message)
        self.examined = examined


class IdealParseError(ValueError):
    """Monomial-ideal text that does not match the input grammar."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
