"""Classification of a conic pair by spectrum and real base points."""

import logging

import numpy as np

from config.tolerances import DEFAULT_TOLERANCES, Tolerances
from geometry.errors import LineOnConicError
from geometry.models import Conic, ConicKind, ProjLine, ProjPoint, adjugate
from geometry.projective import (
    chordal_distance,
    conic_residual,
    line_conic_intersect,
    split_two_lines,
)
from pencil.models import BasePoint, IntersectionTag, IntersectionType, PencilSpectrum, RootCluster
from pencil.spectrum import pencil_spectrum

logger = logging.getLogger(__name__)

# Base points closer than this (chordal) are the same point.
BASE_POINT_MERGE = 1e-6


def _merge(hits: list[tuple[ProjPoint, int]]) -> list[BasePoint]:
    merged: list[list] = []  # [point, accumulated order]
    for p, order in hits:
        for entry in merged:
            if chordal_distance(entry[0], p) < BASE_POINT_MERGE:
                entry[1] += order
                break
        else:
            merged.append([p, order])
    return [BasePoint(point=p, order=o) for p, o in merged]


def _lines_with_conic(lines: list[tuple[ProjLine, int]], conic: Conic) -> list[tuple[ProjPoint, int]]:
    hits: list[tuple[ProjPoint, int]] = []
    for ln, weight in lines:
        try:
            hits.extend((p, mult * weight) for p, mult in line_conic_intersect(ln, conic))
        except LineOnConicError:
            logger.debug("Line %r lies on %r; skipped", ln, conic)
    return hits


def _vertex(member: Conic) -> ProjPoint:
    adj = adjugate(member.m)
    i = int(np.argmax(np.abs(np.diag(adj))))
    return ProjPoint(adj[:, i])


def base_points_from_member(
    member: Conic, conic: Conic, tol: Tolerances = DEFAULT_TOLERANCES
) -> list[BasePoint]:
    """Real common points of ``conic`` with a degenerate pencil member."""
    if member.kind is ConicKind.TWO_LINES:
        g1, g2 = split_two_lines(member)
        return _merge(_lines_with_conic([(g1, 1), (g2, 1)], conic))
    if member.kind is ConicKind.DOUBLE_LINE:
        eig, vecs = np.linalg.eigh(member.m)
        ln = ProjLine(vecs[:, int(np.argmax(np.abs(eig)))])
        return _merge(_lines_with_conic([(ln, 2)], conic))
    if member.kind is ConicKind.POINT_OR_EMPTY:
        vertex = _vertex(member)
        if conic_residual(conic, vertex) < tol.incidence * 10:
            return [BasePoint(point=vertex, order=2)]
    return []


def _members(c: Conic, g: Conic, spectrum: PencilSpectrum) -> list[tuple[RootCluster, Conic]]:
    real = sorted(spectrum.real_roots, key=lambda r: -r.multiplicity)
    return [(r, Conic(c.m + r.value * g.m)) for r in real]


def _best_candidate(candidates: list[list[BasePoint]]) -> list[BasePoint]:
    best: list[BasePoint] = []
    for cand in candidates:
        if sum(bp.order for bp in cand) > sum(bp.order for bp in best):
            best = cand
    return best


def _singular_pair(c: Conic, g: Conic, tol: Tolerances) -> IntersectionType:
    if c.is_regular or g.is_regular:
        regular, singular = (c, g) if c.is_regular else (g, c)
        points = base_points_from_member(singular, regular, tol)
        return IntersectionType(IntersectionTag.HAS_SINGULAR_MEMBER, tuple(points), None, (singular,))
    hits: list[tuple[ProjPoint, int]] = []
    if c.kind is ConicKind.TWO_LINES and g.kind is ConicKind.TWO_LINES:
        for a in split_two_lines(c):
            for b in split_two_lines(g):
                if not a.is_equivalent(b):
                    hits.append((ProjPoint(np.cross(a.coords, b.coords)), 1))
    return IntersectionType(IntersectionTag.HAS_SINGULAR_MEMBER, tuple(_merge(hits)), None, (c, g))


def classify_pair(c: Conic, g: Conic, tol: Tolerances = DEFAULT_TOLERANCES) -> IntersectionType:
    """Intersection configuration of (c, g) from spectrum multiplicities and member ranks."""
    if c.is_equivalent(g):
        return IntersectionType(IntersectionTag.IDENTICAL)
    if not (c.is_regular and g.is_regular):
        return _singular_pair(c, g, tol)

    spectrum = pencil_spectrum(c, g, tol)
    members = _members(c, g, spectrum)
    pattern = spectrum.pattern

    if pattern == (1, 1, 1):
        tag = IntersectionTag.FOUR_SIMPLE
    else:
        top_root, top_member = members[0]
        rank = {
            ConicKind.REGULAR: 3,
            ConicKind.TWO_LINES: 2,
            ConicKind.POINT_OR_EMPTY: 2,
            ConicKind.DOUBLE_LINE: 1,
        }[top_member.kind]
        if top_root.multiplicity == 2:
            tag = IntersectionTag.TWO_SIMPLE_ONE_DOUBLE if rank == 2 else IntersectionTag.TWO_DOUBLE
        else:
            tag = IntersectionTag.TRIPLE_SIMPLE if rank == 2 else IntersectionTag.QUADRUPLE

    degenerate = [member for _, member in members if not member.is_regular]
    points = _best_candidate([base_points_from_member(m, c, tol) for m in degenerate])
    result = IntersectionType(tag, tuple(points), spectrum, tuple(degenerate))
    logger.debug("Classified pair as %s with base point orders %s", tag.value, result.orders)
    return result
