"""Shared exception types."""

from __future__ import annotations


class BoxwoodError(Exception):
    """Base class for every error raised by this package."""


class FormatError(BoxwoodError):
    """A text or JSON document violates its format."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            message = f"{where}: {message}"
        super().__init__(message)


class PreconditionError(BoxwoodError):
    """An operation was invoked on input outside its contract."""


class VerificationError(BoxwoodError):
    """A built representation failed geometric certification."""

    def __init__(self, message: str, report=None):
        self.report = report
        super().__init__(message)


class InternalInvariantError(BoxwoodError):
    """A structural invariant the algorithms guarantee was violated (a bug)."""
