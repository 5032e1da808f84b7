"""Multi-start porism check over deterministic quasi-random admissible starts."""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from chains.errors import BadStartError, NoAdmissibleStartError
from chains.models import (
    ClosureVerdict,
    PonceletScenario,
    PorismReport,
    SingularInscribed,
    SmoothSmooth,
)
from chains.runner import run_chain
from chains.step import initial_state
from config.chain import DEFAULT_CHAIN_CONFIG, ChainConfig
from config.tolerances import DEFAULT_TOLERANCES, Tolerances
from geometry.errors import GeometryError
from geometry.models import Conic, ProjLine, ProjPoint

logger = logging.getLogger(__name__)

GOLDEN_RATIO = (1.0 + math.sqrt(5.0)) / 2.0
MAX_ATTEMPTS_PER_START = 50


def kronecker_sequence(count: int, seed: int) -> np.ndarray:
    """Low-discrepancy points frac(offset + k/φ) in [0, 1) with a seeded offset."""
    offset = np.random.default_rng(seed).random()
    return np.mod(offset + np.arange(count) / GOLDEN_RATIO, 1.0)


def conic_point_at(conic: Conic, u: float) -> ProjPoint:
    """Point of a real regular conic at parameter u ∈ [0, 1), covering every real point once."""
    w, q = np.linalg.eigh(conic.m)
    if np.sum(w > 0) == 1:
        w = -w
    neg, p1, p2 = np.argsort(w)
    phi = 2.0 * math.pi * u
    vec = (
        q[:, p1] * math.cos(phi) / math.sqrt(w[p1])
        + q[:, p2] * math.sin(phi) / math.sqrt(w[p2])
        + q[:, neg] / math.sqrt(-w[neg])
    )
    return ProjPoint(vec)


def line_point_at(ln: ProjLine, u: float) -> ProjPoint:
    """Point of a projective line at parameter u ∈ [0, 1)."""
    _, _, vt = np.linalg.svd(ln.unit.reshape(1, 3))
    phi = math.pi * u
    return ProjPoint(math.cos(phi) * vt[1] + math.sin(phi) * vt[2])


def _sample(s: PonceletScenario, k: int, u: float) -> ProjPoint:
    if isinstance(s, (SmoothSmooth, SingularInscribed)):
        return conic_point_at(s.gamma, u)
    return line_point_at(s.gamma_lines.lines[k % 2], u)


def admissible_starts(
    s: PonceletScenario, count: int, seed: int = 0, tol: Tolerances = DEFAULT_TOLERANCES
) -> list[ProjPoint]:
    """Up to ``count`` admissible starts, skipping sampled points that fail the start checks."""
    starts: list[ProjPoint] = []
    params = kronecker_sequence(count * MAX_ATTEMPTS_PER_START, seed)
    for k, u in enumerate(params):
        if len(starts) == count:
            break
        candidate = _sample(s, k, float(u))
        try:
            initial_state(s, candidate, tol=tol)
        except BadStartError:
            continue
        starts.append(candidate)
    return starts


def porism_probe(
    s: PonceletScenario,
    cfg: ChainConfig = DEFAULT_CHAIN_CONFIG,
    n_starts: int = 20,
    workers: int | None = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> PorismReport:
    """Run chains from ``n_starts`` admissible starts and aggregate their verdicts.

    Per-start geometry errors are collected as failures. Raises NoAdmissibleStartError
    when the scenario has no real admissible start at all.
    """
    if n_starts < 1:
        raise ValueError(f"n_starts must be at least 1, got {n_starts}")
    starts = admissible_starts(s, n_starts, cfg.seed, tol)
    if not starts:
        raise NoAdmissibleStartError(f"no admissible start found for {s.kind.value}")
    if len(starts) < n_starts:
        logger.warning("Only %d of %d requested starts are admissible", len(starts), n_starts)

    def run_one(start: ProjPoint) -> ClosureVerdict | str:
        try:
            return run_chain(s, start, cfg, tol=tol).verdict
        except GeometryError as exc:
            logger.debug("Start %r failed: %s", start, exc)
            return type(exc).__name__

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(run_one, starts))
    else:
        outcomes = [run_one(start) for start in starts]

    verdicts = sorted((o for o in outcomes if not isinstance(o, str)), key=lambda v: v.sort_key())
    failures = sorted(o for o in outcomes if isinstance(o, str))
    report = PorismReport(tuple(verdicts), tuple(failures))
    logger.info(
        "Porism check: %d starts, periods %s, consistent=%s, %d failures",
        len(starts),
        sorted(set(report.periods)),
        report.consistent,
        len(failures),
    )
    return report
