"""Chain iteration with closure, convergence and divergence detection."""

from __future__ import annotations

import logging

import numpy as np

from chains.errors import NoSecondIntersectionError, TangentOnlyError
from chains.models import (
    BothSingular,
    ChainResult,
    ChainState,
    ClosureVerdict,
    PonceletScenario,
    SingularCircumscribed,
    SingularInscribed,
    SmoothSmooth,
)
from chains.step import initial_state, poncelet_step, step_residual
from config.chain import DEFAULT_CHAIN_CONFIG, ChainConfig
from config.tolerances import DEFAULT_TOLERANCES, Tolerances
from geometry.errors import GeometryError
from geometry.models import ProjPoint, ProjTransform
from geometry.projective import chordal_distance, line_conic_intersect, meet
from pencil.classify import classify_pair
from pencil.normal_forms import normalize_both_singular

logger = logging.getLogger(__name__)

# A measured limit this close to a known special point is recognized as that point.
MATCH_RADIUS = 1e-3
# Consecutive non-increasing two-step moves that count as a contracting tail.
CONTRACTION_RUN = 4


def limit_candidates(s: PonceletScenario, tol: Tolerances = DEFAULT_TOLERANCES) -> tuple[ProjPoint, ...]:
    """Points an asymptotic chain can converge to for this scenario."""
    try:
        if isinstance(s, SmoothSmooth):
            info = classify_pair(s.c, s.gamma, tol)
            return tuple(bp.point for bp in info.real_base_points if bp.order >= 2)
        if isinstance(s, SingularInscribed):
            return tuple(p for p, _ in line_conic_intersect(s.cstar.axis, s.gamma))
        if isinstance(s, SingularCircumscribed):
            return (s.gamma_lines.vertex,)
        axis = s.cstar.axis
        return tuple(meet(g, axis, tol) for g in s.gamma_lines.lines)
    except GeometryError as exc:
        logger.debug("No limit candidates for %s: %s", s.kind.value, exc)
        return ()


def _divergence_chart(s: PonceletScenario, tol: Tolerances) -> ProjTransform | None:
    if not isinstance(s, BothSingular):
        return None
    try:
        return normalize_both_singular(s.gamma_lines, s.cstar, tol).transform
    except GeometryError as exc:
        logger.debug("No parallel chart for divergence detection: %s", exc)
        return None


def chart_norm(t: ProjTransform, p: ProjPoint) -> float:
    """Euclidean norm of p in the affine chart of t; infinite on the line at infinity."""
    x, y, z = t.t @ p.unit
    if abs(z) < 1e-300:
        return float("inf")
    return float(np.hypot(x, y) / abs(z))


def match_candidate(p: ProjPoint, candidates: tuple[ProjPoint, ...]) -> ProjPoint | None:
    """Nearest candidate within MATCH_RADIUS of p, if any."""
    best = min(candidates, key=lambda c: chordal_distance(p, c), default=None)
    if best is not None and chordal_distance(p, best) < MATCH_RADIUS:
        return best
    return None


def _diameter(points: list[ProjPoint]) -> float:
    units = np.array([p.unit for p in points])
    units = units * np.where(units @ units[-1] < 0, -1.0, 1.0)[:, None]
    diffs = units[:, None, :] - units[None, :, :]
    return float(np.max(np.linalg.norm(diffs, axis=2)))


def _window_settled(vertices: list[ProjPoint], cfg: ChainConfig) -> bool:
    window = cfg.convergence_window
    if len(vertices) < window:
        return False
    tails: tuple[list[ProjPoint], list[ProjPoint]] = ([], [])
    for index in range(len(vertices) - window, len(vertices)):
        tails[index % 2].append(vertices[index])
    return all(_diameter(tail) < cfg.closure_tol for tail in tails)


def _contracting(vertices: list[ProjPoint], closure_tol: float) -> bool:
    if len(vertices) < CONTRACTION_RUN + 3:
        return False
    moves = [
        chordal_distance(vertices[i], vertices[i - 2])
        for i in range(len(vertices) - CONTRACTION_RUN - 1, len(vertices))
    ]
    shrinking = all(later <= earlier for earlier, later in zip(moves, moves[1:]))
    return shrinking and max(moves[-2:]) < closure_tol


def window_limits(vertices: list[ProjPoint], cfg: ChainConfig) -> tuple[ProjPoint, ProjPoint] | None:
    """Even- and odd-index limits once both trailing subsequences have settled.

    Settled means the last ``convergence_window`` vertices split by index parity into
    two sets of chordal diameter below ``closure_tol``, or the two-step moves have not
    grown over the last CONTRACTION_RUN steps and the latest two are below
    ``closure_tol``. Returns (even-index limit, odd-index limit).
    """
    if len(vertices) < 3 or chordal_distance(vertices[-1], vertices[-3]) >= cfg.closure_tol:
        return None
    if not (_contracting(vertices, cfg.closure_tol) or _window_settled(vertices, cfg)):
        return None
    last = len(vertices) - 1
    if last % 2 == 0:
        return vertices[last], vertices[last - 1]
    return vertices[last - 1], vertices[last]


def asymptotic_verdict(
    a: ProjPoint, b: ProjPoint, candidates: tuple[ProjPoint, ...], cfg: ChainConfig
) -> ClosureVerdict:
    """Point verdict when both limits agree to closure_tol, segment verdict otherwise."""
    if chordal_distance(a, b) < cfg.closure_tol:
        return ClosureVerdict.asymptotic_to_point(a, match_candidate(a, candidates))
    return ClosureVerdict.asymptotic_to_segment(
        a, b, (match_candidate(a, candidates), match_candidate(b, candidates))
    )


def _closes(state: ChainState, first: ChainState, closure_tol: float) -> bool:
    return (
        state.parity == first.parity
        and chordal_distance(state.vertex, first.vertex) < closure_tol
        and chordal_distance(state.side, first.side) < closure_tol
    )


def run_chain(
    s: PonceletScenario,
    start: ProjPoint,
    cfg: ChainConfig = DEFAULT_CHAIN_CONFIG,
    reverse: bool = False,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> ChainResult:
    """Iterate the Poncelet step from start until closure, convergence, divergence or budget.

    Raises BadStartError for an inadmissible start and propagates step errors raised
    on the first step. A degenerate step later on marks a fixed point and ends the
    chain with an asymptotic verdict.
    """
    first = initial_state(s, start, reverse, tol)
    candidates = limit_candidates(s, tol)
    chart = _divergence_chart(s, tol)
    divergence_bound = 1.0 / cfg.closure_tol

    state = first
    vertices = [start]
    sides = []
    residuals = [step_residual(s, first)]

    def finish(verdict: ClosureVerdict) -> ChainResult:
        logger.info("Chain from %r finished after %d steps: %s", start, len(sides), verdict)
        return ChainResult(tuple(vertices), tuple(sides), verdict, tuple(residuals))

    for step in range(1, cfg.max_steps + 1):
        try:
            state = poncelet_step(s, state, tol)
        except (TangentOnlyError, NoSecondIntersectionError) as exc:
            if not sides:
                raise
            logger.debug("Fixed point reached at step %d: %s", step, exc)
            limit = vertices[-1]
            return finish(ClosureVerdict.asymptotic_to_point(limit, match_candidate(limit, candidates)))

        sides.append(state.side)
        if _closes(state, first, cfg.closure_tol):
            return finish(ClosureVerdict.closed(step))
        vertices.append(state.vertex)
        residuals.append(step_residual(s, state))

        if chart is not None and chart_norm(chart, state.vertex) > divergence_bound:
            return finish(ClosureVerdict.divergent())
        limits = window_limits(vertices, cfg)
        if limits is not None:
            return finish(asymptotic_verdict(*limits, candidates, cfg))

    return finish(ClosureVerdict.budget_exhausted())
