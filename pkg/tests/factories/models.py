"""Shared factories for building scenario and chain instances in tests."""

from __future__ import annotations

from collections.abc import Sequence
from typing import Any

from chains.models import ChainResult, ClosureVerdict, PonceletScenario, SmoothSmooth
from chains.scenarios import circle
from config.chain import DEFAULT_CHAIN_CONFIG, ChainConfig
from config.tolerances import DEFAULT_TOLERANCES, Tolerances
from geometry.models import ProjLine, ProjPoint, line, point
from workbench.scenario_io import ScenarioDocument


def make_concentric(*, gamma_radius: float = 1.0, caustic_radius: float = 0.5) -> SmoothSmooth:
    """Build a pair of concentric circles; radius ratio 1/2 closes after three sides."""
    return SmoothSmooth(gamma=circle(gamma_radius), c=circle(caustic_radius))


def make_chain_config(
    *,
    max_steps: int = 200,
    closure_tol: float = 1e-8,
    convergence_window: int = 50,
    seed: int = 0,
) -> ChainConfig:
    """Build a ChainConfig with a small step budget suited to unit tests."""
    return ChainConfig(
        max_steps=max_steps,
        closure_tol=closure_tol,
        convergence_window=convergence_window,
        seed=seed,
    )


def make_document(
    *,
    scenario: PonceletScenario | None = None,
    chain: ChainConfig = DEFAULT_CHAIN_CONFIG,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    name: str = "",
    start: ProjPoint | None = None,
    start_param: float | None = None,
    reverse: bool = False,
    render: dict[str, Any] | None = None,
) -> ScenarioDocument:
    """Build a ScenarioDocument, defaulting to the triangle-closing concentric pair."""
    return ScenarioDocument(
        scenario=scenario or make_concentric(),
        chain=chain,
        tolerances=tolerances,
        name=name,
        start=start,
        start_param=start_param,
        reverse=reverse,
        render=render or {},
    )


def make_open_chain(
    *,
    vertices: Sequence[ProjPoint] = (point(1.0, 0.0), point(0.0, 1.0), point(-1.0, 0.0)),
    sides: Sequence[ProjLine] = (line(1.0, 1.0, -1.0), line(-1.0, 1.0, -1.0)),
    verdict: ClosureVerdict | None = None,
    residuals: Sequence[float] = (0.0, 1e-16, 2e-16),
) -> ChainResult:
    """Build a chain with one more vertex than sides, as an unfinished run has."""
    return ChainResult(
        vertices=tuple(vertices),
        sides=tuple(sides),
        verdict=verdict or ClosureVerdict.budget_exhausted(),
        residuals=tuple(residuals),
    )
