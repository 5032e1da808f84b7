"""Finite exceptional chains of the singular configurations."""

from chains.errors import NoneExistsError
from chains.models import (
    BothSingular,
    ChainResult,
    ClosureVerdict,
    PonceletScenario,
    SingularCircumscribed,
    SingularInscribed,
)
from config.tolerances import DEFAULT_TOLERANCES, Tolerances
from geometry.errors import CoincidentError
from geometry.models import PointPosition
from geometry.projective import line_conic_intersect, meet, point_position, tangent_pair


def degenerate_special_chains(
    s: PonceletScenario, tol: Tolerances = DEFAULT_TOLERANCES
) -> list[ChainResult]:
    """The segment VW, the tangent pair from g1 ∩ g2, or the segment D1D2.

    Raises NoneExistsError when the configuration has none of them.
    """
    exceptional = ClosureVerdict.exceptional()
    if isinstance(s, SingularInscribed):
        axis = s.cstar.axis
        hits = line_conic_intersect(axis, s.gamma)
        if len(hits) == 2:
            (v, _), (w, _) = hits
            return [ChainResult((v, w), (axis, axis), exceptional)]
        raise NoneExistsError("line C1C2 does not cross gamma")

    if isinstance(s, SingularCircumscribed):
        vertex = s.gamma_lines.vertex
        if point_position(s.c, vertex, tol) is PointPosition.OUTSIDE:
            first, second = tangent_pair(s.c, vertex)
            return [ChainResult((vertex, vertex), (first, second), exceptional)]
        raise NoneExistsError("g1 ∩ g2 is not outside c")

    if isinstance(s, BothSingular):
        axis = s.cstar.axis
        try:
            d1, d2 = (meet(g, axis, tol) for g in s.gamma_lines.lines)
        except CoincidentError as exc:
            raise NoneExistsError("line C1C2 is one of the lines g1, g2") from exc
        return [ChainResult((d1, d2), (axis, axis), exceptional)]

    raise NoneExistsError("smooth pairs have no exceptional finite chain")
