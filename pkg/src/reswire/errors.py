"""Exception types shared across the library."""


class ReswireError(Exception):
    """Base class for all library errors."""


class EdgeListParseError(ReswireError, ValueError):
    """Malformed edge-list input (bad token, negative index, self-loop)."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CrossComponentError(ReswireError, ValueError):
    """Resistance-type quantities are undefined across connected components."""


class DisconnectedGraphError(ReswireError, ValueError):
    """Operation requires a connected graph."""


class BipartiteGraphError(ReswireError, ValueError):
    """Operation requires a non-bipartite graph (spectral radius of the
    normalized adjacency restricted away from the top eigenvector must be < 1)."""


class IllConditionedError(ReswireError, ArithmeticError):
    """Regularized Laplacian system too ill-conditioned to invert reliably."""


class InfeasibleSearchError(ReswireError, ValueError):
    """Brute-force search size exceeds the configured combination cap."""
