"""Exception hierarchy shared across the package."""


class GallaiError(Exception):
    """Base class for every error raised by this package."""


class MalformedRecord(GallaiError, ValueError):
    """Input text does not decode to a simple graph."""


class SelfLoop(MalformedRecord):
    pass


class DuplicateEdge(MalformedRecord):
    pass


class VertexOutOfRange(MalformedRecord):
    pass


class UnsupportedSize(GallaiError, ValueError):
    """Graph order outside the range an operation supports."""


class UnknownPattern(GallaiError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class PatternTooLarge(GallaiError, ValueError):
    pass


class NotInClass(GallaiError):
    """The input graph contains a forbidden induced subgraph of the requested class."""

    def __init__(self, message, pattern=None, embedding=None):
        super().__init__(message)
        self.pattern = pattern
        self.embedding = embedding


class PreconditionC5(NotInClass):
    """Input to the (P5, C5, diamond)-free decomposition violates its class."""


class Disconnected(GallaiError):
    pass


class StructureViolation(GallaiError):
    """A structural decomposition that must exist for the class was not found."""


class OracleTruncated(GallaiError):
    """The exact oracle hit its path budget where a complete answer was required."""
