"""Exact toolkit for general position graphs of flags."""

from flaggraph.errors import BudgetExceeded, ParameterError

__version__ = "0.1.0"

__all__ = ["BudgetExceeded", "ParameterError", "__version__"]
