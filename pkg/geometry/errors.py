"""Exceptions raised by projective primitives."""


class GeometryError(Exception):
    """Base exception for projective-geometry computation errors."""

    pass


class InvalidConicError(GeometryError):
    """All six conic coefficients are zero."""


class DegenerateConicError(GeometryError):
    """Operation needs a regular (rank 3) conic."""


class PolarUndefinedError(GeometryError):
    """The polar m·p vanishes."""


class LineOnConicError(GeometryError):
    """The line is a component of the conic, so the intersection is not finite."""


class EmptyRealLocusError(GeometryError):
    """The conic matrix is definite and has no real points."""


class NotTwoLinesError(GeometryError):
    """The conic does not factor into two distinct real lines."""


class NotCollinearError(GeometryError):
    """Points expected on one line are not collinear."""


class CoincidentError(GeometryError):
    """Two points (or lines) that must be distinct coincide."""


class TooManyCoincidentError(GeometryError):
    """Fewer than three distinct points among a collinear quadruple."""


class SingularTransformError(GeometryError):
    """The transform matrix is not invertible."""
