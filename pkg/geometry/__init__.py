"""Homogeneous-coordinate primitives for the real projective plane."""

from geometry.errors import (
    CoincidentError,
    DegenerateConicError,
    EmptyRealLocusError,
    GeometryError,
    InvalidConicError,
    LineOnConicError,
    NotCollinearError,
    NotTwoLinesError,
    PolarUndefinedError,
    SingularTransformError,
    TooManyCoincidentError,
)
from geometry.models import (
    Conic,
    ConicKind,
    PointPosition,
    ProjLine,
    ProjPoint,
    ProjTransform,
    SingularConic,
    SingularDualConic,
    line,
    point,
)
from geometry.projective import (
    apply_transform,
    chordal_distance,
    conic_coeffs,
    conic_from_coeffs,
    conic_residual,
    cross_ratio,
    eval_point,
    harmonic_conjugate,
    incidence_residual,
    line_conic_intersect,
    line_through,
    meet,
    on_conic,
    point_position,
    polar_line,
    pole,
    split_two_lines,
    tangent_discriminant,
    tangent_pair,
    tangents_from_point,
)

__all__ = [
    "CoincidentError",
    "Conic",
    "ConicKind",
    "DegenerateConicError",
    "EmptyRealLocusError",
    "GeometryError",
    "InvalidConicError",
    "LineOnConicError",
    "NotCollinearError",
    "NotTwoLinesError",
    "PointPosition",
    "PolarUndefinedError",
    "ProjLine",
    "ProjPoint",
    "ProjTransform",
    "SingularConic",
    "SingularDualConic",
    "SingularTransformError",
    "TooManyCoincidentError",
    "apply_transform",
    "chordal_distance",
    "conic_coeffs",
    "conic_from_coeffs",
    "conic_residual",
    "cross_ratio",
    "eval_point",
    "harmonic_conjugate",
    "incidence_residual",
    "line",
    "line_conic_intersect",
    "line_through",
    "meet",
    "on_conic",
    "point",
    "point_position",
    "polar_line",
    "pole",
    "split_two_lines",
    "tangent_discriminant",
    "tangent_pair",
    "tangents_from_point",
]
