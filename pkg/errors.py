"""
Exception types for the Atom Decomposer application.

Input problems are reported as ValueError subclasses so that callers
catching ValueError keep working; budget problems are RuntimeErrors.
"""

from typing import Optional


class AtomDecomposerError(Exception):
    """Base class for all errors raised by this package."""


class EdgeListParseError(AtomDecomposerError, ValueError):
    """Raised when an edge-list stream cannot be parsed."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class InvalidVertexError(AtomDecomposerError, ValueError):
    """Raised for vertex ids out of range or unknown vertex labels."""


class EmptyGraphError(AtomDecomposerError, ValueError):
    """Raised when an operation needs at least one vertex."""


class DisconnectedGraphError(AtomDecomposerError, ValueError):
    """Raised when an operation requires a connected graph."""


class InvalidOrderingError(AtomDecomposerError, ValueError):
    """Raised when a vertex ordering is not a bijection onto 1..n."""


class SeparatorError(AtomDecomposerError, ValueError):
    """Raised when a separator request violates its preconditions."""


class TraceError(AtomDecomposerError, ValueError):
    """Raised for weight queries the recorded MCS trace cannot answer."""


class ResultDocumentError(AtomDecomposerError, ValueError):
    """Raised when a decomposition result document is malformed."""


class OracleBudgetExceeded(AtomDecomposerError, RuntimeError):
    """Raised when a brute-force oracle is asked to work beyond its budget."""
