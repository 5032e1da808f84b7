"""Exceptions raised by the closed-form closure conditions."""

from geometry.errors import GeometryError


class ClosureError(GeometryError):
    """Base exception for closure-condition errors."""

    pass


class AlphaDegenerateError(ClosureError):
    """α is 0 or 1, so the contact is not of order exactly two."""


class NegativeAlphaError(ClosureError):
    """Singular normal forms require α ≥ 0."""


class WrongTypeError(ClosureError):
    """The intersection type is not covered by the requested condition."""


class UnsupportedConfigurationError(ClosureError):
    """The scenario falls outside the degenerate cases with closed-form conditions."""
