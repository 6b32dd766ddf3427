"""Exception types shared across the package."""


class SpecchromError(Exception):
    """Base class for all package-defined failures."""


class Graph6Error(SpecchromError, ValueError):
    """Malformed graph6 input. Carries the byte offset of the defect."""

    def __init__(self, message, offset=None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class GraphSpecError(SpecchromError, ValueError):
    """Unusable graph specification: unknown generator, bad arguments."""


class BoundUndefinedError(SpecchromError, ValueError):
    """Requested bound is undefined for the input (edgeless graph)."""


class SizeLimitError(SpecchromError, ValueError):
    """Input exceeds the documented desk-scale size cap."""


class BudgetExceededError(SpecchromError, RuntimeError):
    """A search or sampling budget ran out before an answer was reached."""


class NotEdgeTransitiveError(SpecchromError, ValueError):
    """Operation requires an edge-transitive target graph.

    Carries a witness pair of edges lying in different orbits.
    """

    def __init__(self, message, witness=None):
        self.witness = witness
        if witness is not None:
            message = f"{message}: edges {witness[0]} and {witness[1]} are not equivalent"
        super().__init__(message)


class EigensolverError(SpecchromError, RuntimeError):
    """The eigendecomposition backend failed to converge."""
