"""
Exception hierarchy shared by every package.
"""


class RamseyError(Exception):
    """Base class for all errors raised by the toolkit."""


class InvalidInputError(RamseyError, ValueError):
    """An argument or a file violates a type invariant."""


class BudgetExceededError(RamseyError):
    """A search hit its node or time cap before finishing."""

    def __init__(self, nodes: int, cap: int | None = None, reason: str = "node cap"):
        self.nodes = nodes
        self.cap = cap
        self.reason = reason
        super().__init__(f"Search budget exceeded ({reason}) after {nodes} nodes")

    def __reduce__(self):
        return type(self), (self.nodes, self.cap, self.reason)


class BudgetOverflowError(RamseyError, OverflowError):
    """A game budget does not fit in a signed 64-bit integer."""


class InvariantViolation(RamseyError):
    """A mathematical property failed; ``witness`` is JSON-serialisable."""

    def __init__(self, message: str, witness: dict | None = None):
        self.witness = witness or {}
        super().__init__(message)


class PainterAborted(RamseyError):
    """The interactive painter reached end of input."""
