"""Exception types shared across the package.

The CLI maps these onto distinct exit codes (input errors -> 2,
exhausted search budgets -> 3, failed verification -> 1).
"""


class GspaceError(Exception):
    """Base class for all package errors."""


class InputError(GspaceError):
    """Malformed input, carrier mismatch, or a size-limit violation."""


class BudgetExceeded(GspaceError):
    """An exhaustive search refused to start or stopped at its node budget."""
