"""Exceptions raised while iterating Poncelet chains."""

from geometry.errors import GeometryError


class ChainError(GeometryError):
    """Base exception for chain construction errors."""

    pass


class NoRealTangentError(ChainError):
    """The vertex is inside the circumscribed conic, so no real tangent passes through it."""


class TangentOnlyError(ChainError):
    """The vertex lies on the circumscribed conic; both tangents coincide."""


class NoSecondIntersectionError(ChainError):
    """The new side meets the inscribed-in locus only at the current vertex."""


class BadStartError(ChainError):
    """The start point is not admissible for the scenario."""


class NoneExistsError(ChainError):
    """The configuration has no exceptional finite chain."""


class NoAdmissibleStartError(ChainError):
    """No sampled point of the inscribed-in locus is an admissible start."""
