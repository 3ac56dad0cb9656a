"""Exception types shared across the package."""

from __future__ import annotations


class GraphFormatError(ValueError):
    """Raised when an edge-list file cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(ValueError):
    """An input violates the documented precondition of an operation."""


class NotColorableError(PreconditionError):
    """Exact search proved that no coloring with the requested colors exists."""


class BudgetExceededError(RuntimeError):
    """A bounded search ran out of nodes before reaching a verdict."""


class SizeGuardError(ValueError):
    """The instance is too large for a brute-force oracle."""


class InvariantViolation(AssertionError):
    """An internal invariant failed: this indicates a bug, not bad input."""


class MinorConstructionError(PreconditionError):
    """A clique-minor construction could not be carried out on the input."""
