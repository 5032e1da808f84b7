"""Coordinate changes carrying each degenerate configuration to its normal form."""

import cmath
import logging
import math

import numpy as np

from config.tolerances import DEFAULT_TOLERANCES, Tolerances
from geometry.errors import DegenerateConicError
from geometry.models import (
    Conic,
    PointPosition,
    ProjLine,
    ProjPoint,
    ProjTransform,
    SingularConic,
    SingularDualConic,
)
from geometry.projective import (
    apply_transform,
    chordal_distance,
    line_conic_intersect,
    meet,
    point_position,
    polar_line,
    pole,
    tangents_from_point,
)
from pencil.classify import classify_pair
from pencil.errors import (
    AlphaOutOfRangeError,
    ContactOrderTooHighError,
    DegenerateConfigurationError,
    LineMeetsConicError,
    NoDoubleContactError,
    VertexNotInsideError,
)
from pencil.models import (
    BothSingularNormalForm,
    IntersectionTag,
    SingularCircumscribedNormalForm,
    SingularInscribedNormalForm,
    SpectralCurve,
    TangentPairNormalForm,
)
from pencil.spectrum import pencil_char_poly

logger = logging.getLogger(__name__)

_LINE_AT_INFINITY = ProjLine(np.array([0.0, 0.0, 1.0]))


def _other_tangent(conic: Conic, p: ProjPoint, known: ProjLine) -> ProjLine:
    """Tangent from p that is not ``known``."""
    candidates = tangents_from_point(conic, p)
    return max(candidates, key=lambda ln: chordal_distance(ln, known))


def normalize_tangent_pair(
    c: Conic, g: Conic, tol: Tolerances = DEFAULT_TOLERANCES
) -> TangentPairNormalForm:
    """Carry a pair with an order-2 contact T to y = x² and αy = x² + βxy + γy².

    T goes to the origin and the common tangent to y = 0. The direction of the tangent
    line at infinity goes to [1:0:0] with unit derivative along it, which fixes the
    remaining freedom, so a pair already in normal form maps by the identity.
    """
    kind = classify_pair(c, g, tol)
    if kind.tag in (IntersectionTag.TRIPLE_SIMPLE, IntersectionTag.QUADRUPLE):
        raise ContactOrderTooHighError(f"contact order exceeds 2 ({kind.tag.value})")
    contacts = kind.points_of_order(2)
    if kind.tag not in (IntersectionTag.TWO_SIMPLE_ONE_DOUBLE, IntersectionTag.TWO_DOUBLE) or not contacts:
        raise NoDoubleContactError(f"no real contact of order 2 ({kind.tag.value})")

    contact = contacts[0]
    tangent = polar_line(c, contact)
    if contact.is_at_infinity(tol.incidence):
        t_hat = contact.unit
        d_hat = np.cross(tangent.coords, t_hat)
    else:
        t_hat = contact.coords / contact.coords[2]
        u, v, _ = tangent.coords
        d_hat = np.array([v, -u, 0.0])
    direction = ProjPoint(d_hat)
    second = _other_tangent(c, direction, tangent)
    a_hat = pole(c, second).coords

    basis = np.column_stack([d_hat, a_hat, t_hat])
    restricted = basis.T @ c.m @ basis
    k1, k2 = restricted[0, 0], restricted[1, 2]
    scaled = basis @ np.diag([1.0, -k1 / (2.0 * k2), 1.0])
    transform = ProjTransform(np.linalg.inv(scaled))

    g_normal = scaled.T @ g.m @ scaled
    g_normal = g_normal / -g_normal[0, 0]
    alpha = float(2.0 * g_normal[1, 2])
    beta = float(-2.0 * g_normal[0, 1])
    gamma = float(-g_normal[1, 1])
    if abs(alpha - 1.0) < tol.root_cluster:
        raise ContactOrderTooHighError("α = 1: contact order exceeds 2")
    logger.debug("Tangent pair normal form α=%.12g β=%.12g γ=%.12g", alpha, beta, gamma)
    return TangentPairNormalForm(alpha=alpha, beta=beta, gamma=gamma, transform=transform, contact=contact)


def spectral_curve(form: TangentPairNormalForm) -> SpectralCurve:
    """Spectral curve data of a tangent-pair normal form."""
    alpha = form.alpha
    if not alpha > 0 or alpha == 1.0:
        raise AlphaOutOfRangeError(f"spectral curve needs 0 < α ≠ 1, got {alpha}")
    c, g = form.conics()
    node_lift = cmath.sqrt(1.0 - 1.0 / alpha)
    return SpectralCurve(
        alpha=alpha,
        cubic=pencil_char_poly(c, g),
        double_point=(-1.0 / alpha, 0.0),
        node_lift=node_lift,
        multiplier=(1.0 + node_lift) / (1.0 - node_lift),
        node_is_split=alpha > 1.0,
    )


def _unit_circle_frame(m: np.ndarray, basis: np.ndarray) -> np.ndarray:
    """Columns F with Fᵀ m F = diag(1, 1, -1), given a basis whose third column is
    conjugate to the first two and whose first two span a line missing the conic.
    """
    restricted = basis.T @ m @ basis
    if restricted[2, 2] > 0:
        restricted = -restricted
    q = restricted[2, 2]
    block = (restricted[:2, :2] + restricted[:2, :2].T) / 2.0
    w, vecs = np.linalg.eigh(block)
    if q >= 0 or np.any(w <= 0):
        raise DegenerateConicError("conic does not map to a real circle in this frame")
    frame = np.zeros((3, 3))
    frame[:2, :2] = vecs @ np.diag(1.0 / np.sqrt(w))
    frame[2, 2] = 1.0 / math.sqrt(-q)
    return basis @ frame


def _rotation(angle: float) -> np.ndarray:
    cos, sin = math.cos(angle), math.sin(angle)
    return np.array([[cos, -sin, 0.0], [sin, cos, 0.0], [0.0, 0.0, 1.0]])


def normalize_singular_inscribed(
    g: Conic, cstar: SingularDualConic, tol: Tolerances = DEFAULT_TOLERANCES
) -> SingularInscribedNormalForm:
    """Send C1C2 to infinity, Γ to the unit circle, C1 to [1:0:0] and C2 to [α:1:0], α ≥ 0."""
    if not g.is_regular:
        raise DegenerateConicError("Γ must be a regular conic")
    axis = cstar.axis
    if line_conic_intersect(axis, g):
        raise LineMeetsConicError("line C1C2 meets Γ; the chain is asymptotic")
    center = pole(g, axis)
    frame = _unit_circle_frame(g.m, np.column_stack([cstar.c1.unit, cstar.c2.unit, center.unit]))
    to_circle = np.linalg.inv(frame)

    c1 = to_circle @ cstar.c1.unit
    rotate = _rotation(-math.atan2(c1[1], c1[0]))
    c2 = rotate @ to_circle @ cstar.c2.unit
    alpha = float(c2[0] / c2[1])
    matrix = rotate @ to_circle
    if alpha < 0:
        matrix = np.diag([1.0, -1.0, 1.0]) @ matrix
        alpha = -alpha
    return SingularInscribedNormalForm(alpha=alpha, transform=ProjTransform(matrix))


def normalize_singular_circumscribed(
    c: Conic, gamma: SingularConic, tol: Tolerances = DEFAULT_TOLERANCES
) -> SingularCircumscribedNormalForm:
    """Send C to the unit circle, g1 to x = 0 and g2 to αx + y = 0, α ≥ 0."""
    if not c.is_regular:
        raise DegenerateConicError("C must be a regular conic")
    vertex = gamma.vertex
    if point_position(c, vertex, tol) is not PointPosition.INSIDE:
        raise VertexNotInsideError("g1 ∩ g2 is not inside C; the chain is asymptotic")
    polar = polar_line(c, vertex)
    _, _, vt = np.linalg.svd(polar.unit.reshape(1, 3))
    frame = _unit_circle_frame(c.m, np.column_stack([vt[1], vt[2], vertex.unit]))
    to_circle = np.linalg.inv(frame)

    # lines transform by the inverse transpose, i.e. by frameᵀ
    g1 = frame.T @ gamma.g1.unit
    rotate = _rotation(-math.atan2(g1[1], g1[0]))
    g2 = rotate @ frame.T @ gamma.g2.unit
    alpha = float(g2[0] / g2[1])
    matrix = rotate @ to_circle
    if alpha < 0:
        matrix = np.diag([-1.0, 1.0, 1.0]) @ matrix
        alpha = -alpha
    return SingularCircumscribedNormalForm(alpha=alpha, transform=ProjTransform(matrix))


def _check_both_singular(gamma: SingularConic, cstar: SingularDualConic, tol: Tolerances) -> None:
    vertex = gamma.vertex
    if cstar.c1.is_equivalent(vertex, tol.incidence):
        raise DegenerateConfigurationError("C1 coincides with g1 ∩ g2")
    if cstar.axis.incident(vertex, tol.incidence):
        raise DegenerateConfigurationError("g1 ∩ g2 lies on line C1C2")
    for name, pt in (("C1", cstar.c1), ("C2", cstar.c2)):
        for label, ln in (("g1", gamma.g1), ("g2", gamma.g2)):
            if ln.incident(pt, tol.incidence):
                raise DegenerateConfigurationError(f"{name} lies on {label}")


def _translation(dx: float, dy: float) -> np.ndarray:
    return np.array([[1.0, 0.0, dx], [0.0, 1.0, dy], [0.0, 0.0, 1.0]])


def normalize_both_singular(
    gamma: SingularConic, cstar: SingularDualConic, tol: Tolerances = DEFAULT_TOLERANCES
) -> BothSingularNormalForm:
    """Send the line through g1 ∩ g2 and C2 to infinity so that g1 ∥ g2."""
    _check_both_singular(gamma, cstar, tol)
    vertex = gamma.vertex
    horizon = np.cross(vertex.coords, cstar.c2.coords)
    horizon = horizon / np.max(np.abs(horizon))

    shift = np.eye(3)
    if abs(horizon[2]) < tol.incidence:
        if not cstar.c1.is_at_infinity(tol.incidence):
            x, y = cstar.c1.to_affine()
        else:
            x, y = max(((0.0, 0.0), (1.0, 0.0), (0.0, 1.0)), key=lambda q: abs(horizon @ (q[0], q[1], 1.0)))
        shift = _translation(-x, -y)
        horizon = np.linalg.inv(shift).T @ horizon
    u, v, w = horizon
    send = np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [u / w, v / w, 1.0]])
    transform = ProjTransform(send @ shift)

    c1x, c1y = apply_transform(transform, cstar.c1).to_affine()
    distances = []
    for ln in (gamma.g1, gamma.g2):
        a, b, cc = apply_transform(transform, ln).coords
        distances.append(abs(a * c1x + b * c1y + cc) / math.hypot(a, b))
    return BothSingularNormalForm(
        transform=transform,
        d1=float(distances[0]),
        d2=float(distances[1]),
        D1=meet(gamma.g1, cstar.axis),
        D2=meet(gamma.g2, cstar.axis),
    )
