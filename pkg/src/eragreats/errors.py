"""Exception types shared across the package."""

from __future__ import annotations


class EraGreatsError(Exception):
    """Base class for all errors raised by this package."""


class DataError(EraGreatsError):
    """Invalid or inconsistent input data.

    Raised for malformed files, tables that violate their structural
    invariants, and mismatched configuration (for example a weight regime
    whose years do not line up with the population table).  ``path`` and
    ``line`` are attached when the problem was found while reading a file.
    """

    def __init__(self, message: str, *, path=None, line: int | None = None):
        self.path = path
        self.line = line
        if path is not None and line is not None:
            message = f"{path}:{line}: {message}"
        elif path is not None:
            message = f"{path}: {message}"
        super().__init__(message)


class DomainError(EraGreatsError, ValueError):
    """An operation was called outside its mathematical domain.

    Examples: a cutoff year outside the population table's span, a
    probability outside [0, 1], or a rank depth larger than the list.
    """
