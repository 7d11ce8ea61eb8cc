"""Shared exception types."""

from __future__ import annotations


class UsageError(ValueError):
    """Bad input: malformed descriptor, mismatched groups, invalid argument."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed an explicit budget; carries the offending size."""

    def __init__(self, message: str, size: int | None = None, budget: int | None = None):
        if size is not None and budget is not None:
            message = f"{message} (size {size} exceeds budget {budget})"
        super().__init__(message)
        self.size = size
        self.budget = budget


class InvariantViolation(RuntimeError):
    """Internal consistency failure (dual-path disagreement, non-integral solve)."""
