"""
Exception hierarchy. Every class maps to one stable CLI exit code (see src/cli.py).
"""

from __future__ import annotations
from typing import Optional


class DchiError(Exception):
    """Base class for all library errors."""


class ContractError(DchiError, ValueError):
    """A precondition of an operation was violated by the caller."""


class Graph6ParseError(ContractError):
    def __init__(self, message: str, offset: Optional[int] = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class DomainError(ContractError):
    """Input lies outside the domain an operation is defined on."""


class CapabilityError(DchiError, RuntimeError):
    """Input exceeds a desk-scale size cap."""


class CertificationError(DchiError, RuntimeError):
    """A constructed colouring failed the proper/distinguishing check."""


class TheoremViolation(DchiError, RuntimeError):
    def __init__(self, message: str, graph6: Optional[str] = None):
        self.graph6 = graph6
        if graph6 is not None:
            message = f"{message} [graph6={graph6}]"
        super().__init__(message)


class SearchCancelled(DchiError):
    """Raised when a CancelToken fires inside a long search."""
