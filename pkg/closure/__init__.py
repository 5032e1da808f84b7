"""Closed-form closure conditions and their numeric cross-check."""

from closure.conditions import (
    angle_between_directions,
    both_singular_condition,
    high_order_condition,
    recognize_cos_squared,
    singular_circumscribed_condition,
    singular_inscribed_condition,
    tangent_pair_condition,
)
from closure.errors import (
    AlphaDegenerateError,
    ClosureError,
    NegativeAlphaError,
    UnsupportedConfigurationError,
    WrongTypeError,
)
from closure.models import DEFAULT_N_MAX, Agreement, AnalyticVerdict, NeverClosesReason
from closure.predict import compare_verdicts, predict, verdict_agrees

__all__ = [
    "DEFAULT_N_MAX",
    "Agreement",
    "AlphaDegenerateError",
    "AnalyticVerdict",
    "ClosureError",
    "NegativeAlphaError",
    "NeverClosesReason",
    "UnsupportedConfigurationError",
    "WrongTypeError",
    "angle_between_directions",
    "both_singular_condition",
    "compare_verdicts",
    "high_order_condition",
    "predict",
    "recognize_cos_squared",
    "singular_circumscribed_condition",
    "singular_inscribed_condition",
    "tangent_pair_condition",
    "verdict_agrees",
]
