"""Exception hierarchy shared across lcskit."""


class LcsKitError(Exception):
    """Base class for all lcskit errors."""


class PresentationSyntaxError(LcsKitError, ValueError):
    """Malformed presentation text, with 1-based line/column of the offending token."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


class PresentationError(LcsKitError, ValueError):
    """A relation or word violates a structural invariant (index range, ordering)."""


class HypothesisError(LcsKitError):
    """An operation was called outside the hypothesis of the theorem it relies on."""


class ResourceLimitError(LcsKitError):
    """A configured size bound was exceeded."""


class ArrangementError(LcsKitError, ValueError):
    """Degenerate line arrangement input (duplicate or parallel lines, bad file)."""


class RealizationError(LcsKitError):
    """No rational realization was found within the retry schedule."""
