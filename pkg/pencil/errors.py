"""Exceptions raised while classifying and normalizing conic pairs."""

from geometry.errors import GeometryError


class PencilError(GeometryError):
    """Base exception for pencil classification and normal-form errors."""

    pass


class IdenticalConicsError(PencilError):
    """Both conics are the same up to scale, so the pencil is a single conic."""


class NoDoubleContactError(PencilError):
    """No real base point of order exactly 2."""


class ContactOrderTooHighError(PencilError):
    """The contact is of order 3 or 4 (the normal form would need α = 1)."""


class AlphaOutOfRangeError(PencilError):
    """α is outside the range where the spectral curve has its node."""


class WrongMultiplicityPatternError(PencilError):
    """The spectrum is not one simple plus one double real root."""


class LineMeetsConicError(PencilError):
    """Line C1C2 meets the smooth conic in real points."""


class VertexNotInsideError(PencilError):
    """The vertex g1 ∩ g2 is not strictly inside the smooth conic."""


class DegenerateConfigurationError(PencilError):
    """A both-singular configuration with coincident or incident points and lines."""
