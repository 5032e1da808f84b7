"""Analytic closure verdicts."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

DEFAULT_N_MAX = 64


class NeverClosesReason(Enum):
    """Why the closed-form analysis rules out closed chains."""

    NOT_ROOT_OF_UNITY = "NotRootOfUnity"
    CONDITION_B_FAILS = "ConditionBFails"  # closed chains exist only over the complex numbers
    HIGH_ORDER_CONTACT = "HighOrderContact"
    ODD_EXCLUDED = "OddExcluded"
    CROSS_RATIO_NOT_HARMONIC = "CrossRatioNotHarmonic"
    ASYMPTOTIC_REGIME = "AsymptoticRegime"


@dataclass(frozen=True)
class AnalyticVerdict:
    """ClosesAt(n, m) or NeverCloses(reason).

    ``m`` is the numerator of the recognized rational angle when one exists.
    """

    closes: bool
    n: int | None = None
    m: int | None = None
    reason: NeverClosesReason | None = None

    def __post_init__(self) -> None:
        if self.closes:
            if self.n is None or self.n < 3:
                raise ValueError(f"ClosesAt needs n >= 3, got {self.n}")
            if self.reason is not None:
                raise ValueError("ClosesAt carries no reason")
        elif self.reason is None:
            raise ValueError("NeverCloses needs a reason")

    @classmethod
    def closes_at(cls, n: int, m: int | None = None) -> AnalyticVerdict:
        return cls(True, n=n, m=m)

    @classmethod
    def never_closes(cls, reason: NeverClosesReason) -> AnalyticVerdict:
        return cls(False, reason=reason)

    def __str__(self) -> str:
        if self.closes:
            return f"ClosesAt({self.n})"
        assert self.reason is not None
        return f"NeverCloses({self.reason.value})"


class Agreement(Enum):
    """How an analytic verdict compares with a numeric chain."""

    AGREE = "Agree"
    PERIOD_MISMATCH = "PeriodMismatch"  # both close, the numeric first return is a proper divisor
    DISAGREE = "Disagree"
