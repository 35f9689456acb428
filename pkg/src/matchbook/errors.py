"""Exception hierarchy shared across the package."""


class MatchbookError(Exception):
    """Base class for all package errors."""


class GraphInputError(MatchbookError, ValueError):
    """Malformed graph construction input (loop edge, endpoint out of range)."""


class DisconnectedGraphError(MatchbookError, ValueError):
    """Operation requires a connected graph."""


class NotBipartiteError(MatchbookError, ValueError):
    """The graph contains an odd cycle."""


class NotPlanarError(MatchbookError, ValueError):
    """The graph admits no planar embedding."""


class BcpValidationError(MatchbookError, ValueError):
    """Input is not a connected bipartite cubic planar graph.

    `predicate` names the first structural check that failed.
    """

    def __init__(self, predicate: str, message: str | None = None):
        self.predicate = predicate
        super().__init__(message or f"input violates the '{predicate}' requirement")


class FormatError(MatchbookError, ValueError):
    """Malformed serialized graph or embedding."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class ColoringError(MatchbookError, ValueError):
    """No proper 3-face-coloring exists; the input is not a valid plane
    bipartite cubic embedding."""


class DecompositionError(MatchbookError, ValueError):
    """Two-edge-cut extraction failed (bridge present or malformed cut)."""


class SearchBudgetExceeded(MatchbookError, RuntimeError):
    """A backtracking search hit its node budget before finishing."""


class EmbeddingError(MatchbookError, RuntimeError):
    """The layout pipeline could not produce a valid embedding."""


class OracleLimitError(MatchbookError, ValueError):
    """Graph too large for the exhaustive page-count oracle."""


class ContractError(MatchbookError, ValueError):
    """Caller violated an internal API contract (e.g. an embedding that does
    not cover every edge)."""
