from __future__ import annotations
from typing import Optional


class OrientnetError(Exception):
    """Base exception for orientnet."""

class ValidationError(OrientnetError):
    """Raised for invalid instances or arguments."""

class ParseError(ValidationError):
    """Raised when an instance file cannot be parsed."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)

class InvalidOrientationError(ValidationError):
    """Raised when an orientation does not cover exactly the graph's edges."""

class VerificationError(ValidationError):
    """Raised when a solver disagrees with the oracle."""

class PreconditionError(OrientnetError):
    """Raised when a solver's structural precondition does not hold."""

class CapExceededError(PreconditionError):
    """Raised when an exhaustive oracle would exceed its configured cap."""
