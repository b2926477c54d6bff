"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Raised when arguments fall outside an operation's parameter domain."""


class BudgetExceeded(RuntimeError):
    """Raised when an instance is larger than a configured vertex or node budget."""
