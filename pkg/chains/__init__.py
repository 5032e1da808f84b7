"""Poncelet chain construction, verdicts and porism probing."""

from chains.errors import (
    BadStartError,
    ChainError,
    NoAdmissibleStartError,
    NoneExistsError,
    NoRealTangentError,
    NoSecondIntersectionError,
    TangentOnlyError,
)
from chains.models import (
    BothSingular,
    ChainResult,
    ChainState,
    ClosureVerdict,
    PonceletScenario,
    PorismReport,
    ScenarioKind,
    SingularCircumscribed,
    SingularInscribed,
    SmoothSmooth,
    VerdictKind,
)
from chains.porism import admissible_starts, conic_point_at, kronecker_sequence, line_point_at, porism_probe
from chains.runner import limit_candidates, run_chain
from chains.special import degenerate_special_chains
from chains.step import infer_parity, initial_state, poncelet_step, second_intersection, step_residual

__all__ = [
    "BadStartError",
    "BothSingular",
    "ChainError",
    "ChainResult",
    "ChainState",
    "ClosureVerdict",
    "NoAdmissibleStartError",
    "NoRealTangentError",
    "NoSecondIntersectionError",
    "NoneExistsError",
    "PonceletScenario",
    "PorismReport",
    "ScenarioKind",
    "SingularCircumscribed",
    "SingularInscribed",
    "SmoothSmooth",
    "TangentOnlyError",
    "VerdictKind",
    "admissible_starts",
    "conic_point_at",
    "degenerate_special_chains",
    "infer_parity",
    "initial_state",
    "kronecker_sequence",
    "limit_candidates",
    "line_point_at",
    "poncelet_step",
    "porism_probe",
    "run_chain",
    "second_intersection",
    "step_residual",
]
