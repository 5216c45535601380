"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the support or parameter space."""


class NumericalError(RuntimeError):
    """A numerical routine failed to reach its tolerance.

    Attributes
    ----------
    estimate:
        Best value available when the routine gave up (may be ``None``).
    error_bound:
        Error estimate attached to ``estimate`` (may be ``None``).
    """

    def __init__(self, message: str, estimate: float | None = None,
                 error_bound: float | None = None) -> None:
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound


class BracketError(NumericalError):
    """The supplied interval does not bracket a sign change."""


class InputError(ValueError):
    """Malformed user data (file contents, CLI values)."""

    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line
