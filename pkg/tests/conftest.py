"""Project-wide pytest fixtures and utilities."""

from __future__ import annotations

import logging
from collections.abc import Callable
from pathlib import Path

import pytest

from workbench.scenario_io import ScenarioDocument, load_scenario

logger = logging.getLogger(__name__)

SCENARIOS_DIR = Path(__file__).resolve().parent.parent / "scenarios"

FIGURE_NAMES = (
    "fig_double_triangle",
    "fig_cusp",
    "fig_cusp2",
    "fig_triple",
    "quadruple",
    "fig_C_singular",
    "fig_asymp",
    "fig_asym",
    "fig_Gama_singular",
    "fig_harmonic",
    "fig_equal",
    "fig_not_center",
)


@pytest.fixture
def scenarios_dir() -> Path:
    """Directory holding the bundled figure scenarios."""
    return SCENARIOS_DIR


@pytest.fixture
def load_figure() -> Callable[[str], ScenarioDocument]:
    """Provide a loader for bundled figure scenarios by name."""

    def _load(name: str) -> ScenarioDocument:
        return load_scenario(SCENARIOS_DIR / f"{name}.json")

    return _load


@pytest.fixture(autouse=True)
def _clear_tolerance_env(monkeypatch):
    """Keep a developer's PONCELET_TOL from leaking into tests."""
    monkeypatch.delenv("PONCELET_TOL", raising=False)
