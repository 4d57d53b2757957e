class DomainError(ValueError):
    """Raised when an operation's precondition is violated (bad input)."""


class DimensionMismatch(DomainError):
    """Raised when exponent vectors of different lengths meet."""


class InternalConsistencyError(RuntimeError):
    """Raised when a structural guarantee the algorithms rely on fails.

    This never indicates bad user input; it means a certified bound or a
    solvability guarantee was violated and the result cannot be trusted.
    """
