"""Exception types shared across the package."""


class DomainError(ValueError):
    """Raised when arguments fall outside the P(n,k) family or an operation's domain."""


class InternalError(RuntimeError):
    """Raised when a self-check fails; indicates a bug, not bad input."""


class ConsistencyError(RuntimeError):
    """Raised when persisted results conflict with each other."""


class BudgetExceededError(RuntimeError):
    """Raised by solvers when a computation exceeds its time budget."""
