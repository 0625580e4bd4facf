"""Shared exception types."""


class NmdskitError(Exception):
    """Base class for all library errors."""


class BudgetExceededError(NmdskitError):
    """An exact computation would exceed the configured work budget."""


class FieldError(NmdskitError):
    """Invalid field construction or field element."""
