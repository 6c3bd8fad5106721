"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """An exhaustive enumeration would exceed its configured budget.

    Raised instead of sampling or truncating: every answer this package
    produces is meant to be a certificate, so a partial scan is worthless.
    """
