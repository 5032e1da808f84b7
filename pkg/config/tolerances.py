"""Numerical tolerances shared by the geometry, pencil and closure packages."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    """Thresholds applied after normalization of homogeneous representatives."""

    incidence: float = 1e-9  # point-on-line / point-on-conic residual
    rank: float = 1e-8  # relative singular-value / eigenvalue cutoff
    root_cluster: float = 1e-6  # merge cubic roots closer than this * (1 + |root|)
    recognition: float = 1e-9  # rational-angle and cos^2 recognition

    def __post_init__(self) -> None:
        """Reject non-positive thresholds."""
        for name in ("incidence", "rank", "root_cluster", "recognition"):
            value = getattr(self, name)
            if not value > 0:
                raise ValueError(f"{name} tolerance must be > 0, got {value!r}")


DEFAULT_TOLERANCES = Tolerances()
