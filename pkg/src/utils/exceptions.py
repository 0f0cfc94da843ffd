"""
Custom exceptions for the pattern algebra toolkit.

None of these derive from ValueError, so they pass through pydantic
validators unchanged.
"""

from typing import Optional


class MatAlgBaseException(Exception):
    """Base exception for all toolkit errors."""

    exit_code: int = 1

    def __init__(self, message: str, original_error: Optional[Exception] = None):
        super().__init__(message)
        self.original_error = original_error


class ParseError(MatAlgBaseException):
    """Raised when an input document cannot be decoded."""

    exit_code = 2


class DimensionMismatchError(MatAlgBaseException):
    """Raised when operands live in different dimensions."""

    exit_code = 2

    def __init__(
        self,
        left: int,
        right: int,
        original_error: Optional[Exception] = None,
    ):
        super().__init__(f"Dimension mismatch: {left} != {right}", original_error)
        self.left = left
        self.right = right


class IndexRangeError(MatAlgBaseException):
    """Raised when an index falls outside 1..n."""

    exit_code = 2


class SubsetError(MatAlgBaseException):
    """Raised for an index subset that is empty, full or malformed."""

    exit_code = 2


class SpectrumError(MatAlgBaseException):
    """Raised when a diagonal spectrum violates a hypothesis."""

    exit_code = 3

    def __init__(
        self,
        hypothesis: str,
        message: Optional[str] = None,
        original_error: Optional[Exception] = None,
    ):
        super().__init__(
            message or f"Eigenvalues must be {hypothesis}", original_error
        )
        self.hypothesis = hypothesis


class VerificationMismatchError(MatAlgBaseException):
    """Raised when an independent check disagrees with a computed result."""

    exit_code = 4


class GenericityError(VerificationMismatchError):
    """Raised when random generic entries cancel on every permitted draw."""


class CapExceededError(MatAlgBaseException):
    """Raised when a size parameter exceeds its configured cap."""

    exit_code = 5

    def __init__(
        self,
        name: str,
        value: int,
        cap: int,
        original_error: Optional[Exception] = None,
    ):
        super().__init__(f"{name}={value} exceeds cap {cap}", original_error)
        self.name = name
        self.value = value
        self.cap = cap


class StorageError(MatAlgBaseException):
    """Raised when artifact storage operations fail."""

    exit_code = 2
