"""Chain iteration settings and the environment override for the closure tolerance."""

import os
from collections.abc import Mapping
from dataclasses import dataclass, replace

TOLERANCE_ENV_VAR = "PONCELET_TOL"


@dataclass(frozen=True)
class ChainConfig:
    """Configuration for single and multi-start Poncelet chain runs."""

    max_steps: int = 10000
    closure_tol: float = 1e-8  # chordal distance for vertex and side return
    convergence_window: int = 50  # trailing vertices inspected for a limit
    seed: int = 0  # offsets the low-discrepancy start sequence

    def __post_init__(self) -> None:
        """Validate step budget, window and tolerance."""
        if self.max_steps < 3:
            raise ValueError(f"max_steps must be >= 3, got {self.max_steps}")
        if self.convergence_window < 4:
            raise ValueError(f"convergence_window must be >= 4, got {self.convergence_window}")
        if not self.closure_tol > 0:
            raise ValueError(f"closure_tol must be > 0, got {self.closure_tol}")

    def with_overrides(self, **overrides: object) -> "ChainConfig":
        """Return a copy with the non-None overrides applied."""
        changes = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **changes)

    @staticmethod
    def from_env(env: Mapping[str, str] | None = None) -> "ChainConfig":
        """Load defaults, overriding closure_tol from PONCELET_TOL when set."""
        if env is None:
            env = os.environ
        raw = (env.get(TOLERANCE_ENV_VAR) or "").strip()
        if not raw:
            return DEFAULT_CHAIN_CONFIG
        try:
            tol = float(raw)
        except ValueError as exc:
            raise ValueError(
                f"Invalid {TOLERANCE_ENV_VAR} '{raw}', must be a float (e.g., {TOLERANCE_ENV_VAR}=1e-8)"
            ) from exc
        if not tol > 0:
            raise ValueError(f"Invalid {TOLERANCE_ENV_VAR} '{raw}', must be > 0")
        return ChainConfig(closure_tol=tol)


DEFAULT_CHAIN_CONFIG = ChainConfig()
