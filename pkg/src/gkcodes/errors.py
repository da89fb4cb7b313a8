"""Error types shared across the package.

Every failure mode carries a stable machine-readable code so callers (and the
CLI) can dispatch on it without parsing messages.
"""

from __future__ import annotations


class GKError(Exception):
    """Base error; ``code`` is a stable identifier, ``message`` is free text."""

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message


class BudgetExceeded(GKError):
    """An enumeration ran out of budget.

    ``partial`` optionally carries whatever was found before the budget ran
    out.  Partial data is never a count and never an absence certificate.
    """

    def __init__(self, message: str, partial=None):
        super().__init__("BUDGET_EXCEEDED", message)
        self.partial = partial
