"""Parameter scans comparing the analytic closure condition with numeric chains."""

from __future__ import annotations

import logging
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np
import pandas as pd

from chains.errors import ChainError
from chains.models import PonceletScenario
from chains.porism import admissible_starts
from chains.runner import run_chain
from chains.scenarios import (
    singular_circumscribed_scenario,
    singular_inscribed_scenario,
    tangent_pair_scenario,
)
from closure.conditions import (
    singular_circumscribed_condition,
    singular_inscribed_condition,
    tangent_pair_condition,
)
from closure.models import DEFAULT_N_MAX, Agreement, AnalyticVerdict
from closure.predict import compare_verdicts
from config.chain import DEFAULT_CHAIN_CONFIG, ChainConfig
from config.tolerances import DEFAULT_TOLERANCES, Tolerances

logger = logging.getLogger(__name__)

NO_START = "NoAdmissibleStart"


class ScanFamily(Enum):
    """One-parameter families swept by α."""

    TANGENT = "tangent"
    SINGULAR_INSCRIBED = "singular-inscribed"
    SINGULAR_CIRCUMSCRIBED = "singular-circumscribed"


@dataclass(frozen=True)
class ScanRow:
    alpha: float
    analytic: AnalyticVerdict
    numeric: str
    agreement: Agreement

    @property
    def agree(self) -> bool:
        return self.agreement is Agreement.AGREE


def _family(
    family: ScanFamily, beta: float, gamma: float
) -> tuple[Callable[[float], PonceletScenario], Callable[[float, int, Tolerances], AnalyticVerdict]]:
    if family is ScanFamily.TANGENT:
        return (
            lambda a: tangent_pair_scenario(a, beta, gamma),
            lambda a, n_max, tol: tangent_pair_condition(a, beta, gamma, n_max, tol),
        )
    if family is ScanFamily.SINGULAR_INSCRIBED:
        return singular_inscribed_scenario, singular_inscribed_condition
    return singular_circumscribed_scenario, singular_circumscribed_condition


def alpha_scan(
    family: ScanFamily,
    alphas: np.ndarray,
    cfg: ChainConfig = DEFAULT_CHAIN_CONFIG,
    n_max: int = DEFAULT_N_MAX,
    beta: float = 1.0,
    gamma: float = 0.0,
    workers: int | None = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> list[ScanRow]:
    """Analytic and numeric verdicts for each α, in input order.

    Each numeric chain starts from the first admissible quasi-random start.
    """
    build, condition = _family(family, beta, gamma)

    def evaluate(alpha: float) -> ScanRow:
        analytic = condition(alpha, n_max, tol)
        scenario = build(alpha)
        starts = admissible_starts(scenario, 1, cfg.seed, tol)
        if not starts:
            outcome = Agreement.DISAGREE if analytic.closes else Agreement.AGREE
            return ScanRow(alpha, analytic, NO_START, outcome)
        try:
            numeric = run_chain(scenario, starts[0], cfg, tol=tol).verdict
        except ChainError as exc:
            logger.warning("Chain failed at alpha=%.12g: %s", alpha, exc)
            return ScanRow(alpha, analytic, type(exc).__name__, Agreement.DISAGREE)
        return ScanRow(alpha, analytic, str(numeric), compare_verdicts(analytic, numeric))

    values = [float(a) for a in alphas]
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(evaluate, values))
    else:
        rows = [evaluate(a) for a in values]
    agreeing = sum(r.agree for r in rows)
    logger.info("Scanned %d values of alpha (%s): %d agree", len(rows), family.value, agreeing)
    return rows


def scan_frame(rows: list[ScanRow]) -> pd.DataFrame:
    """Table with columns alpha, analytic, numeric, agreement."""
    return pd.DataFrame.from_records(
        [
            {
                "alpha": r.alpha,
                "analytic": str(r.analytic),
                "numeric": r.numeric,
                "agreement": r.agreement.name,
            }
            for r in rows
        ],
        columns=["alpha", "analytic", "numeric", "agreement"],
    )


def _grid(alpha_min: float, alpha_max: float, steps: int) -> np.ndarray:
    if steps < 1:
        raise ValueError(f"steps must be at least 1, got {steps}")
    if not alpha_min <= alpha_max:
        raise ValueError(f"alpha_min {alpha_min} exceeds alpha_max {alpha_max}")
    return np.linspace(alpha_min, alpha_max, steps)


def scan_tangent(
    alpha_min: float,
    alpha_max: float,
    steps: int,
    beta: float = 1.0,
    gamma: float = 0.0,
    cfg: ChainConfig = DEFAULT_CHAIN_CONFIG,
    n_max: int = DEFAULT_N_MAX,
    workers: int | None = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> pd.DataFrame:
    """Grid over α for the tangent-pair normal form with fixed β, γ."""
    rows = alpha_scan(
        ScanFamily.TANGENT, _grid(alpha_min, alpha_max, steps), cfg, n_max, beta, gamma, workers, tol
    )
    return scan_frame(rows)


def scan_singular(
    family: ScanFamily,
    alpha_min: float,
    alpha_max: float,
    steps: int,
    cfg: ChainConfig = DEFAULT_CHAIN_CONFIG,
    n_max: int = DEFAULT_N_MAX,
    workers: int | None = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> pd.DataFrame:
    """Grid over α for the singular inscribed or circumscribed normal form."""
    if family is ScanFamily.TANGENT:
        raise ValueError("use scan_tangent for the tangent family")
    rows = alpha_scan(family, _grid(alpha_min, alpha_max, steps), cfg, n_max, workers=workers, tol=tol)
    return scan_frame(rows)
