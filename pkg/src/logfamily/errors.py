"""Exception types raised across the package."""

from __future__ import annotations


class UnsupportedDomainError(ValueError):
    """Argument lies outside the range a numeric routine supports."""


class PoleError(ValueError):
    """Evaluation requested at a pole."""


class ConvergenceError(ArithmeticError):
    """Iteration stopped before meeting its tolerance; ``best`` holds the last estimate."""

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best


class UnknownEntryError(KeyError):
    """No corpus record carries the requested id."""
