"""Exception types shared across the package."""

from __future__ import annotations

from typing import Any


class PreconditionError(ValueError):
    """An operation was called on input outside its contract."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed (indicates a bug)."""


class TheoremGap(RuntimeError):
    """A guarantee the combinatorial argument promises did not hold.

    Carries a ``diagnostic`` mapping so callers (notably the CLI) can dump
    the offending state instead of guessing a result.
    """

    def __init__(self, message: str, diagnostic: dict[str, Any] | None = None):
        super().__init__(message)
        self.diagnostic = dict(diagnostic or {})


class BudgetExceeded(RuntimeError):
    """An exhaustive oracle refused to run because the instance is too large."""
