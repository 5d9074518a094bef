"""Shared exception types."""


class HomcostError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(HomcostError):
    """Malformed input text.  Knows the offending line number when there is one."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        parts = []
        if source is not None:
            parts.append(source)
        if line is not None:
            parts.append(f"line {line}")
        prefix = ", ".join(parts)
        super().__init__(f"{prefix}: {message}" if prefix else message)


class CyclicGraphError(HomcostError):
    """An operation that needs an acyclic digraph ran into a directed cycle."""

    def __init__(self, message: str, vertex: int | None = None):
        self.vertex = vertex
        super().__init__(message)


class BudgetExceededError(HomcostError):
    """The brute-force search space is larger than the configured budget."""


class RefusedTargetError(HomcostError):
    """Solving was refused because the target falls in an intractable class.

    Carries the classification verdict so callers can report why.
    """

    def __init__(self, message: str, verdict=None):
        self.verdict = verdict
        super().__init__(message)
