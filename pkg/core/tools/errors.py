# core/tools/errors.py
"""
Exception types shared by the tools. The CLI maps them to exit codes:
InputError -> 2, GuardExceededError -> 3, InternalConsistencyError -> 1.
"""

from typing import Any, Optional


class InputError(ValueError):
    """Malformed or mathematically unusable input."""


class NotRootedPresentationError(InputError):
    """The rooted complex of the supplied rooting map does not give a minimal resolution."""


class NoNonFaceError(InputError):
    """The complex is a full simplex, so its Stanley-Reisner ideal is zero."""


class GuardExceededError(RuntimeError):
    """An enumeration would exceed a configured resource guard."""

    def __init__(self, guard: str, limit: int, requested: int):
        self.guard = guard
        self.limit = limit
        self.requested = requested
        super().__init__(f"guard '{guard}' exceeded: requested {requested}, limit {limit}")


class InternalConsistencyError(RuntimeError):
    """An identity that must hold by construction failed."""

    def __init__(self, message: str, report: Optional[Any] = None):
        self.report = report
        super().__init__(message)


def check_guard(guard: str, limit: int, requested: int) -> None:
    if requested > limit:
        raise GuardExceededError(guard, limit, requested)
