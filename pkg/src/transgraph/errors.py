"""Exception and warning types raised by transgraph."""


class TransgraphError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(TransgraphError, ValueError):
    """Malformed edge-list text. ``line`` is 1-based, or None for whole-input problems."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(TransgraphError, ValueError):
    """An argument violates a documented precondition."""


class GenerationError(TransgraphError, RuntimeError):
    """Random generation could not satisfy its constraints."""


class IndexOverflowError(TransgraphError, OverflowError):
    """An index value left the signed 64-bit range."""


class DuplicateEdgeWarning(UserWarning):
    """An edge occurred more than once in an edge list and was collapsed."""
