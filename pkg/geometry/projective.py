"""Projective operations: evaluation, polarity, intersection, tangency, cross ratio, transforms."""

from __future__ import annotations

import math
from typing import overload

import numpy as np

from config.tolerances import DEFAULT_TOLERANCES, Tolerances
from geometry.errors import (
    CoincidentError,
    DegenerateConicError,
    EmptyRealLocusError,
    InvalidConicError,
    LineOnConicError,
    NotCollinearError,
    NotTwoLinesError,
    PolarUndefinedError,
    TooManyCoincidentError,
)
from geometry.models import (
    Conic,
    ConicKind,
    HomogeneousTriple,
    PointPosition,
    ProjLine,
    ProjPoint,
    ProjTransform,
    SingularConic,
    SingularDualConic,
    adjugate,
    unit,
)

# Relative discriminant below which a restricted quadratic has a double root.
DOUBLE_ROOT_REL = 1e-10


def conic_from_coeffs(a: float, b: float, c: float, d: float, e: float, f: float) -> Conic:
    """Conic a x² + b xy + c y² + d xz + e yz + f z² = 0."""
    coeffs = (a, b, c, d, e, f)
    if all(v == 0 for v in coeffs):
        raise InvalidConicError("conic coefficients cannot all be zero")
    return Conic(
        np.array(
            [
                [a, b / 2.0, d / 2.0],
                [b / 2.0, c, e / 2.0],
                [d / 2.0, e / 2.0, f],
            ]
        )
    )


def conic_coeffs(conic: Conic) -> tuple[float, float, float, float, float, float]:
    """Inverse of conic_from_coeffs for the stored representative."""
    m = conic.m
    return (
        float(m[0, 0]),
        float(2 * m[0, 1]),
        float(m[1, 1]),
        float(2 * m[0, 2]),
        float(2 * m[1, 2]),
        float(m[2, 2]),
    )


def eval_point(conic: Conic, p: ProjPoint) -> float:
    """pᵀ·m·p, using the affine representative (z = 1) for finite points."""
    v = p.coords
    if not p.is_at_infinity():
        v = v / v[2]
    return float(v @ conic.m @ v)


def conic_residual(conic: Conic, p: ProjPoint) -> float:
    """Scale-free on-conic residual |p̂ᵀ m p̂| with a unit-norm p̂."""
    v = p.unit
    return abs(float(v @ conic.m @ v))


def incidence_residual(p: ProjPoint, ln: ProjLine) -> float:
    return abs(float(np.dot(p.unit, ln.unit)))


def on_conic(conic: Conic, p: ProjPoint, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    return conic_residual(conic, p) < tol.incidence


def chordal_distance(p: HomogeneousTriple, q: HomogeneousTriple) -> float:
    """Distance between unit representatives, minimized over the sign flip."""
    a, b = p.unit, q.unit
    return float(min(np.linalg.norm(a - b), np.linalg.norm(a + b)))


def line_through(p: ProjPoint, q: ProjPoint, tol: Tolerances = DEFAULT_TOLERANCES) -> ProjLine:
    """Join of two distinct points."""
    if p.is_equivalent(q, tol.incidence):
        raise CoincidentError(f"cannot join coincident points {p!r} and {q!r}")
    return ProjLine(np.cross(p.coords, q.coords))


def meet(l1: ProjLine, l2: ProjLine, tol: Tolerances = DEFAULT_TOLERANCES) -> ProjPoint:
    """Intersection point of two distinct lines."""
    if l1.is_equivalent(l2, tol.incidence):
        raise CoincidentError(f"cannot meet coincident lines {l1!r} and {l2!r}")
    return ProjPoint(np.cross(l1.coords, l2.coords))


def _pencil_basis(v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal basis of the 2-space orthogonal to v."""
    _, _, vt = np.linalg.svd(v.reshape(1, 3))
    return vt[1], vt[2]


def _restricted_quadratic(
    a: np.ndarray, b: np.ndarray, m: np.ndarray
) -> tuple[float, float, float]:
    return float(a @ m @ a), float(a @ m @ b), float(b @ m @ b)


def _relative_discriminant(qa: float, qb: float, qc: float) -> float:
    """qb² − qa·qc over the squared Frobenius norm of the form; basis-rotation invariant."""
    scale = max(qa * qa + 2.0 * qb * qb + qc * qc, 1e-300)
    return (qb * qb - qa * qc) / scale


def _quadratic_roots(qa: float, qb: float, qc: float) -> list[tuple[np.ndarray, int]]:
    """Real roots (s, t) of qa s² + 2 qb st + qc t² with multiplicities."""
    disc = _relative_discriminant(qa, qb, qc)
    if disc < -DOUBLE_ROOT_REL:
        return []
    if disc <= DOUBLE_ROOT_REL:
        if abs(qa) >= abs(qc):
            return [(np.array([-qb, qa]), 2)]
        return [(np.array([qc, -qb]), 2)]
    root = math.sqrt(qb * qb - qa * qc)
    q = -(qb + math.copysign(root, qb))
    return [(np.array([q, qa]), 1), (np.array([qc, q]), 1)]


def _lex_key(obj: HomogeneousTriple) -> tuple[float, ...]:
    return tuple(round(float(v), 12) for v in obj.coords)


def line_conic_intersect(ln: ProjLine, conic: Conic) -> list[tuple[ProjPoint, int]]:
    """Real intersection points of a line and a conic with multiplicities (0, 1 or 2 points)."""
    a, b = _pencil_basis(ln.unit)
    qa, qb, qc = _restricted_quadratic(a, b, conic.m)
    if max(abs(qa), abs(qb), abs(qc)) < DEFAULT_TOLERANCES.incidence:
        raise LineOnConicError(f"{ln!r} is a component of {conic!r}")
    hits = [(ProjPoint(st[0] * a + st[1] * b), mult) for st, mult in _quadratic_roots(qa, qb, qc)]
    return sorted(hits, key=lambda hit: _lex_key(hit[0]))


def tangent_discriminant(conic: Conic, p: ProjPoint) -> float:
    """Relative discriminant of the dual quadratic over lines through p.

    Positive when two real tangents pass through p, negative when none do, and
    tending to zero as p approaches the conic.
    """
    a, b = _pencil_basis(p.unit)
    return _relative_discriminant(*_restricted_quadratic(a, b, conic.dual))


def _require_regular(conic: Conic) -> None:
    if not conic.is_regular:
        raise DegenerateConicError(f"expected a regular conic, got {conic.kind.value}")


def polar_line(conic: Conic, p: ProjPoint) -> ProjLine:
    """Polar of p; the tangent at p when p lies on the conic."""
    _require_regular(conic)
    v = conic.m @ p.unit
    if float(np.max(np.abs(v))) < DEFAULT_TOLERANCES.incidence:
        raise PolarUndefinedError(f"polar of {p!r} is undefined")
    return ProjLine(v)


def pole(conic: Conic, ln: ProjLine) -> ProjPoint:
    """Pole of a line with respect to a regular conic."""
    _require_regular(conic)
    return ProjPoint(conic.dual @ ln.unit)


def point_position(
    conic: Conic, p: ProjPoint, tol: Tolerances = DEFAULT_TOLERANCES
) -> PointPosition:
    """Inside / On / Outside by the two-tangent criterion."""
    _require_regular(conic)
    if conic.is_definite:
        raise EmptyRealLocusError("conic has no real points")
    if conic_residual(conic, p) < tol.incidence:
        return PointPosition.ON
    if tangent_discriminant(conic, p) > 0:
        return PointPosition.OUTSIDE
    return PointPosition.INSIDE


def tangent_pair(conic: Conic, p: ProjPoint) -> tuple[ProjLine, ProjLine]:
    """Both roots of the dual quadratic over lines through p, lexicographically ordered.

    The discriminant is clamped at zero, so callers decide the position of p first.
    """
    a, b = _pencil_basis(p.unit)
    qa, qb, qc = _restricted_quadratic(a, b, conic.dual)
    root = math.sqrt(max(qb * qb - qa * qc, 0.0))
    q = -(qb + math.copysign(root, qb))
    if q == 0.0:
        ln = ProjLine(-qb * a + qa * b)
        return ln, ln
    first, second = sorted((ProjLine(q * a + qa * b), ProjLine(qc * a + q * b)), key=_lex_key)
    return first, second


def tangents_from_point(
    conic: Conic, p: ProjPoint, tol: Tolerances = DEFAULT_TOLERANCES
) -> list[ProjLine]:
    """Tangent lines to a regular conic through p: two, one or none."""
    position = point_position(conic, p, tol)
    if position is PointPosition.INSIDE:
        return []
    if position is PointPosition.ON:
        return [polar_line(conic, p)]
    first, second = tangent_pair(conic, p)
    if first.is_equivalent(second, tol.incidence):
        return [first]
    return [first, second]


def split_two_lines(conic: Conic) -> tuple[ProjLine, ProjLine]:
    """Factor a real line-pair conic into its two lines, ordered lexicographically."""
    if conic.kind is not ConicKind.TWO_LINES:
        raise NotTwoLinesError(f"expected two real lines, got {conic.kind.value}")
    m = conic.m
    adj = adjugate(m)
    i = int(np.argmin(np.diag(adj)))
    if adj[i, i] >= 0:
        raise NotTwoLinesError("line pair has no real factorization")
    vertex = adj[:, i] / math.sqrt(-adj[i, i])
    cross = np.array(
        [
            [0.0, vertex[2], -vertex[1]],
            [-vertex[2], 0.0, vertex[0]],
            [vertex[1], -vertex[0], 0.0],
        ]
    )
    rank_one = m + cross
    r, c = np.unravel_index(int(np.argmax(np.abs(rank_one))), rank_one.shape)
    g = ProjLine(rank_one[r, :])
    h = ProjLine(rank_one[:, c])
    first, second = sorted((g, h), key=_lex_key)
    return first, second


def collinearity_residual(points: list[ProjPoint]) -> float:
    """Smallest singular value of the stacked unit representatives."""
    stacked = np.array([p.unit for p in points])
    return float(np.linalg.svd(stacked, compute_uv=False)[-1])


def _line_parameters(points: list[ProjPoint], tol: Tolerances) -> list[np.ndarray]:
    stacked = np.array([p.unit for p in points])
    _, sv, vt = np.linalg.svd(stacked)
    if len(sv) >= 3 and sv[2] > tol.incidence * 10:
        raise NotCollinearError(f"points are not collinear (residual {sv[2]:.3g})")
    return [np.array([row @ vt[0], row @ vt[1]]) for row in stacked]


def _det2(a: np.ndarray, b: np.ndarray) -> float:
    return float(a[0] * b[1] - a[1] * b[0])


def cross_ratio(
    p1: ProjPoint,
    p2: ProjPoint,
    p3: ProjPoint,
    p4: ProjPoint,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> float:
    """Cross ratio (p1, p2; p3, p4) of four collinear points; ±inf when p1≡p4 or p2≡p3."""
    points = [p1, p2, p3, p4]
    distinct: list[ProjPoint] = []
    for p in points:
        if not any(p.is_equivalent(q, tol.incidence) for q in distinct):
            distinct.append(p)
    if len(distinct) < 3:
        raise TooManyCoincidentError("cross ratio needs at least three distinct points")
    s1, s2, s3, s4 = _line_parameters(points, tol)
    num = _det2(s1, s3) * _det2(s2, s4)
    den = _det2(s1, s4) * _det2(s2, s3)
    if p1.is_equivalent(p4, tol.incidence) or p2.is_equivalent(p3, tol.incidence) or den == 0.0:
        return math.copysign(math.inf, num * den if den != 0.0 else num)
    return num / den


def harmonic_conjugate(
    p1: ProjPoint, p2: ProjPoint, p3: ProjPoint, tol: Tolerances = DEFAULT_TOLERANCES
) -> ProjPoint:
    """Fourth harmonic point: cross_ratio(p1, p2, p3, result) = -1."""
    for a, b in ((p1, p2), (p1, p3), (p2, p3)):
        if a.is_equivalent(b, tol.incidence):
            raise CoincidentError("harmonic conjugate needs three distinct points")
    _line_parameters([p1, p2, p3], tol)
    a, b = p1.unit, p2.unit
    basis = np.column_stack([a, b])
    (ca, cb), *_ = np.linalg.lstsq(basis, p3.unit, rcond=None)
    return ProjPoint(ca * a - cb * b)


@overload
def apply_transform(t: ProjTransform, obj: ProjPoint) -> ProjPoint: ...
@overload
def apply_transform(t: ProjTransform, obj: ProjLine) -> ProjLine: ...
@overload
def apply_transform(t: ProjTransform, obj: Conic) -> Conic: ...
@overload
def apply_transform(t: ProjTransform, obj: SingularConic) -> SingularConic: ...
@overload
def apply_transform(t: ProjTransform, obj: SingularDualConic) -> SingularDualConic: ...


def apply_transform(t: ProjTransform, obj: object) -> object:
    """Push an object through t: points by t·p, lines by t⁻ᵀ·ℓ, conics by t⁻ᵀ·m·t⁻¹."""
    if isinstance(obj, ProjPoint):
        return ProjPoint(t.t @ obj.coords)
    if isinstance(obj, ProjLine):
        return ProjLine(t.inv.T @ obj.coords)
    if isinstance(obj, Conic):
        return Conic(t.inv.T @ obj.m @ t.inv)
    if isinstance(obj, SingularConic):
        return SingularConic(apply_transform(t, obj.g1), apply_transform(t, obj.g2))
    if isinstance(obj, SingularDualConic):
        return SingularDualConic(apply_transform(t, obj.c1), apply_transform(t, obj.c2))
    raise TypeError(f"cannot transform {type(obj).__name__}")
