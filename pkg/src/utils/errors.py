"""Exceptions raised by the library."""


class AtlasError(ValueError):
    """Base class for every domain error raised by the library."""


class ParseError(AtlasError):
    """Text could not be parsed as a slope, rational or word."""


class DegenerateArc(AtlasError):
    """An arc was requested with equal endpoints."""


class InfiniteFamily(AtlasError):
    """Farey neighbors accumulate inside the requested arc."""


class UndefinedSlope(AtlasError):
    """A framing update produced the zero vector."""


class InvalidTorus(AtlasError):
    """Solid or mixed torus data violates its invariants."""


class InvalidCoefficient(AtlasError):
    """A surgery coefficient is outside the range a rule covers."""


class InvalidParameter(AtlasError):
    """A parameter is outside the range an operation is defined on."""
