"""Typed error hierarchy shared by all pvoc modules.

Every domain failure raises a ``PvocError`` subclass so callers (and the
CLI, which maps them to exit code 1) can distinguish bad input from bugs.
Programming errors (invalid constructor arguments and the like) raise
plain ``ValueError``.
"""


class PvocError(Exception):
    """Base class for all domain errors raised by this package."""


class EmptyGraph(PvocError):
    """Graph construction received no usable vertices or edges."""


class ParseError(PvocError):
    """A file could not be parsed; carries the offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownVertex(PvocError):
    """A community file names a vertex that is not in the graph."""


class IncompleteCover(PvocError):
    """A community file that must cover every vertex left some out."""


class NotDisjoint(PvocError):
    """A disjoint structure was required but a vertex has several communities."""


class IsolatedVertex(PvocError):
    """Permanence is undefined for a degree-zero vertex."""


class InvalidTarget(PvocError):
    """A trial move targeted a community with no edge to the vertex."""


class DomainMismatch(PvocError):
    """Two structures being compared do not live on the same vertex set."""


class EmptyCover(PvocError):
    """An operation needs at least one community but got none."""


class DegenerateStudy(PvocError):
    """The overlap-stripping study removed every vertex."""


class NoOverlapVertex(PvocError):
    """Subnetwork sampling needs a vertex with at least two memberships."""


class WriteError(PvocError):
    """An output file could not be written."""
