"""One application of the Poncelet construction for each scenario kind."""

from __future__ import annotations

import numpy as np

from chains.errors import (
    BadStartError,
    NoRealTangentError,
    NoSecondIntersectionError,
    TangentOnlyError,
)
from chains.models import (
    BothSingular,
    ChainState,
    PonceletScenario,
    SingularCircumscribed,
    SingularInscribed,
    SmoothSmooth,
)
from config.tolerances import DEFAULT_TOLERANCES, Tolerances
from geometry.errors import CoincidentError
from geometry.models import Conic, ProjLine, ProjPoint
from geometry.projective import (
    chordal_distance,
    conic_residual,
    incidence_residual,
    line_through,
    meet,
    tangent_discriminant,
    tangent_pair,
)

NO_TANGENT_REL = 1e-12
TANGENT_ONLY_REL = 1e-14
# The incoming side must be closer than this fraction of the branch gap to one tangent.
BRANCH_MARGIN = 0.25


def _tangent_pair(c: Conic, v: ProjPoint) -> tuple[ProjLine, ProjLine]:
    """Both real tangents to c through v, in lexicographic order."""
    disc = tangent_discriminant(c, v)
    if disc < -NO_TANGENT_REL:
        raise NoRealTangentError(f"{v!r} is inside the circumscribed conic")
    if disc <= TANGENT_ONLY_REL:
        raise TangentOnlyError(f"{v!r} lies on the circumscribed conic")
    return tangent_pair(c, v)


def _other_tangent(c: Conic, v: ProjPoint, incoming: ProjLine) -> ProjLine:
    first, second = _tangent_pair(c, v)
    to_first, to_second = chordal_distance(first, incoming), chordal_distance(second, incoming)
    if min(to_first, to_second) >= BRANCH_MARGIN * chordal_distance(first, second):
        raise TangentOnlyError(f"tangents at {v!r} cannot be told apart from the incoming side")
    return first if to_first >= to_second else second


def second_intersection(gamma: Conic, v: ProjPoint, side: ProjLine) -> ProjPoint:
    """The point of gamma on side other than v, from the product of the roots."""
    d = np.cross(side.unit, v.unit)
    vv = v.unit
    m = gamma.m
    w = float(d @ m @ d) * vv - 2.0 * float(vv @ m @ d) * d
    if float(np.linalg.norm(w)) < 1e-300:
        raise NoSecondIntersectionError(f"{side!r} meets gamma only at {v!r}")
    nxt = ProjPoint(w)
    if chordal_distance(nxt, v) < 1e-12:
        raise NoSecondIntersectionError(f"{side!r} is tangent to gamma at {v!r}")
    return nxt


def _index_on(lines: tuple[ProjLine, ProjLine], p: ProjPoint) -> int:
    return int(incidence_residual(p, lines[1]) < incidence_residual(p, lines[0]))


def _index_through(points: tuple[ProjPoint, ProjPoint], side: ProjLine) -> int:
    return int(incidence_residual(points[1], side) < incidence_residual(points[0], side))


def infer_parity(s: PonceletScenario, vertex: ProjPoint, side: ProjLine) -> int:
    """Parity of a (vertex, incoming side) pair by incidence."""
    if isinstance(s, SingularInscribed):
        return _index_through(s.cstar.points, side)
    if isinstance(s, (SingularCircumscribed, BothSingular)):
        return _index_on(s.gamma_lines.lines, vertex)
    return 0


def _meet_other(side: ProjLine, target: ProjLine, tol: Tolerances) -> ProjPoint:
    try:
        return meet(side, target, tol)
    except CoincidentError as exc:
        raise NoSecondIntersectionError(f"{side!r} coincides with {target!r}") from exc


def poncelet_step(
    s: PonceletScenario, state: ChainState, tol: Tolerances = DEFAULT_TOLERANCES
) -> ChainState:
    """Advance one vertex: choose the outgoing side, then its next meeting with the inscribed-in locus.

    The returned state's ``side`` is the side just traversed, which is the incoming
    side of the new vertex.
    """
    v = state.vertex
    if isinstance(s, SmoothSmooth):
        side = _other_tangent(s.c, v, state.side)
        return ChainState(second_intersection(s.gamma, v, side), side, 0)

    if isinstance(s, SingularInscribed):
        nxt = 1 - state.parity
        try:
            side = line_through(v, s.cstar.points[nxt], tol)
        except CoincidentError as exc:
            raise NoSecondIntersectionError(f"{v!r} coincides with C{nxt + 1}") from exc
        return ChainState(second_intersection(s.gamma, v, side), side, nxt)

    if isinstance(s, SingularCircumscribed):
        nxt = 1 - state.parity
        side = _other_tangent(s.c, v, state.side)
        return ChainState(_meet_other(side, s.gamma_lines.lines[nxt], tol), side, nxt)

    nxt = 1 - state.parity
    pole_index = 1 - _index_through(s.cstar.points, state.side)
    try:
        side = line_through(v, s.cstar.points[pole_index], tol)
    except CoincidentError as exc:
        raise NoSecondIntersectionError(f"{v!r} coincides with C{pole_index + 1}") from exc
    return ChainState(_meet_other(side, s.gamma_lines.lines[nxt], tol), side, nxt)


def step_residual(s: PonceletScenario, state: ChainState) -> float:
    """Largest incidence or tangency defect of a state."""
    v, side = state.vertex, state.side
    residuals = [incidence_residual(v, side)]
    if isinstance(s, (SmoothSmooth, SingularInscribed)):
        residuals.append(conic_residual(s.gamma, v))
    else:
        residuals.append(incidence_residual(v, s.gamma_lines.lines[state.parity]))
    if isinstance(s, (SmoothSmooth, SingularCircumscribed)):
        u = side.unit
        residuals.append(abs(float(u @ s.c.dual @ u)))
    elif isinstance(s, SingularInscribed):
        residuals.append(incidence_residual(s.cstar.points[state.parity], side))
    else:
        residuals.append(min(incidence_residual(c, side) for c in s.cstar.points))
    return max(residuals)


def initial_state(
    s: PonceletScenario,
    start: ProjPoint,
    reverse: bool = False,
    tol: Tolerances = DEFAULT_TOLERANCES,
    locus_tol: float = 1e-8,
) -> ChainState:
    """Admissibility check plus the virtual incoming side at the start.

    Forward runs leave a smooth caustic along the first tangent in lexicographic order
    and a singular C* through C1; ``reverse`` swaps both choices.
    """
    if isinstance(s, (SmoothSmooth, SingularInscribed)):
        if conic_residual(s.gamma, start) >= locus_tol:
            raise BadStartError(f"{start!r} is not on gamma")
    else:
        on = [incidence_residual(start, g) < locus_tol for g in s.gamma_lines.lines]
        if not any(on):
            raise BadStartError(f"{start!r} is on neither g1 nor g2")
        if all(on) or chordal_distance(start, s.gamma_lines.vertex) < locus_tol:
            raise BadStartError(f"{start!r} is the vertex of the line pair")

    if isinstance(s, (SmoothSmooth, SingularCircumscribed)):
        try:
            tangents = _tangent_pair(s.c, start)
        except (NoRealTangentError, TangentOnlyError) as exc:
            raise BadStartError(f"{start!r} is not outside the circumscribed conic") from exc
        incoming = tangents[0] if reverse else tangents[1]
        return ChainState(start, incoming, infer_parity(s, start, incoming))

    for i, c in enumerate(s.cstar.points):
        if chordal_distance(start, c) < locus_tol:
            raise BadStartError(f"{start!r} coincides with C{i + 1}")
    through = 0 if reverse else 1
    incoming = line_through(start, s.cstar.points[through], tol)
    if isinstance(s, SingularInscribed):
        return ChainState(start, incoming, through)
    return ChainState(start, incoming, infer_parity(s, start, incoming))
