"""Exception types shared across the package."""


class Graph6Error(ValueError):
    """Malformed graph6 input."""


class GuardExceededError(RuntimeError):
    """A construction would exceed the desk-scale size guard."""


class ContainmentError(RuntimeError):
    """A spectrum containment that should hold failed.

    Carries the first unmatched value and its gap to the nearest available
    candidate, so callers can tell a tolerance problem from a genuine
    violation.
    """

    def __init__(self, message: str, witness: float, gap: float):
        super().__init__(message)
        self.witness = witness
        self.gap = gap


class NumericHealthError(RuntimeError):
    """A numeric invariant that is guaranteed by theory failed in practice."""
