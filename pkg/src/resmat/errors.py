"""Exception types shared across the package."""


class ResmatError(Exception):
    """Base class for all package errors."""


class GraphParseError(ResmatError):
    """Malformed graph or weight file; message names the offending line."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DisconnectedGraphError(ResmatError):
    """Raised when an operation needs finite distances between all pairs."""


class LimitExceededError(ResmatError):
    """Raised instead of starting an enumeration that would blow the budget."""

    def __init__(self, what, size, limit):
        super().__init__(f"{what}: size {size} exceeds the limit of {limit}")
        self.size = size
        self.limit = limit


class NotATreeError(ResmatError):
    """Input graph is not a tree (or is one of the rejected degenerate trees)."""


class PathGraphError(NotATreeError):
    """Paths are rejected: their minimal resolving sets have mixed sizes,
    so the associated independence system is not a matroid."""


class NotAMatroidError(ResmatError):
    """Operation is only defined for systems that verified as matroids."""
