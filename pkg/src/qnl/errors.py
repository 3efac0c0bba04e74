"""Exception hierarchy shared by every qnl subpackage."""

from __future__ import annotations


class QnlError(Exception):
    """Base class for all errors raised by qnl."""


class FormatError(QnlError):
    """Raised on malformed symbols or files. Carries the offending position."""

    def __init__(self, message: str, *, index: int | None = None, line: int | None = None) -> None:
        super().__init__(message)
        self.index = index
        self.line = line


class DimensionError(QnlError):
    """Raised when two objects disagree on the number of qubits / variables."""


class SizeLimitError(QnlError):
    """Raised when an exact computation is requested above its size limit."""
