"""Exception types shared across the package."""


class SinglatError(Exception):
    """Base class for every domain error raised by this package."""


class GraphError(SinglatError):
    """Invalid graph structure (duplicate ids, dangling edges, ...)."""


class GraphParseError(GraphError):
    """Syntax error in a graph file; carries the offending line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class CycleError(SinglatError):
    """Invalid cycle argument (wrong length, not effective, ...)."""


class NotNegativeDefiniteError(SinglatError):
    """Operation requires a negative definite intersection form."""


class SearchLimitError(SinglatError):
    """A search was refused because its state space is unbounded or too large."""


class SpliceError(SinglatError):
    """Graph cannot be turned into a splice diagram, or a diagram operation failed."""
