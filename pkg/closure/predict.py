"""Dispatch a scenario to its closed-form closure condition and compare with numeric chains."""

from __future__ import annotations

import logging

from chains.models import (
    BothSingular,
    ClosureVerdict,
    PonceletScenario,
    SingularCircumscribed,
    SingularInscribed,
    SmoothSmooth,
)
from closure.conditions import (
    both_singular_condition,
    high_order_condition,
    singular_circumscribed_condition,
    singular_inscribed_condition,
    tangent_pair_condition,
)
from closure.errors import UnsupportedConfigurationError
from closure.models import DEFAULT_N_MAX, Agreement, AnalyticVerdict, NeverClosesReason
from config.tolerances import DEFAULT_TOLERANCES, Tolerances
from geometry.models import PointPosition
from geometry.projective import line_conic_intersect, point_position
from pencil.classify import classify_pair
from pencil.errors import ContactOrderTooHighError, NoDoubleContactError
from pencil.models import IntersectionTag
from pencil.normal_forms import (
    normalize_both_singular,
    normalize_singular_circumscribed,
    normalize_singular_inscribed,
    normalize_tangent_pair,
)

logger = logging.getLogger(__name__)

ASYMPTOTIC = AnalyticVerdict.never_closes(NeverClosesReason.ASYMPTOTIC_REGIME)


def _predict_smooth(s: SmoothSmooth, n_max: int, tol: Tolerances) -> AnalyticVerdict:
    info = classify_pair(s.c, s.gamma, tol)
    if info.tag in (IntersectionTag.TRIPLE_SIMPLE, IntersectionTag.QUADRUPLE):
        return high_order_condition(info)
    if info.tag not in (IntersectionTag.TWO_SIMPLE_ONE_DOUBLE, IntersectionTag.TWO_DOUBLE):
        raise UnsupportedConfigurationError(f"no closed-form condition for {info.tag.value} pairs")
    try:
        form = normalize_tangent_pair(s.c, s.gamma, tol)
    except ContactOrderTooHighError:
        return AnalyticVerdict.never_closes(NeverClosesReason.HIGH_ORDER_CONTACT)
    except NoDoubleContactError as exc:
        raise UnsupportedConfigurationError(str(exc)) from exc
    logger.debug("Tangent pair α=%.12g β=%.12g γ=%.12g", form.alpha, form.beta, form.gamma)
    if not 0.0 < form.alpha < 1.0:
        return ASYMPTOTIC
    return tangent_pair_condition(form.alpha, form.beta, form.gamma, n_max, tol)


def predict(
    s: PonceletScenario,
    n_max: int = DEFAULT_N_MAX,
    tol: Tolerances = DEFAULT_TOLERANCES,
    sides: int | None = None,
) -> AnalyticVerdict:
    """Closed-form verdict for any of the four degenerate configurations.

    ``sides`` asks about one side count on the singular members and is ignored otherwise.
    Raises UnsupportedConfigurationError for pairs without an order-2 or higher contact.
    """
    if isinstance(s, SmoothSmooth):
        return _predict_smooth(s, n_max, tol)
    if isinstance(s, SingularInscribed):
        if line_conic_intersect(s.cstar.axis, s.gamma):
            return ASYMPTOTIC
        form = normalize_singular_inscribed(s.gamma, s.cstar, tol)
        return singular_inscribed_condition(form.alpha, n_max, tol, sides)
    if isinstance(s, SingularCircumscribed):
        if point_position(s.c, s.gamma_lines.vertex, tol) is not PointPosition.INSIDE:
            return ASYMPTOTIC
        form = normalize_singular_circumscribed(s.c, s.gamma_lines, tol)
        return singular_circumscribed_condition(form.alpha, n_max, tol, sides)
    if isinstance(s, BothSingular):
        form = normalize_both_singular(s.gamma_lines, s.cstar, tol)
        verdict = both_singular_condition(form, s.cstar, tol)
        return verdict if verdict.closes else ASYMPTOTIC
    raise UnsupportedConfigurationError(f"unknown scenario {s!r}")


def compare_verdicts(analytic: AnalyticVerdict, numeric: ClosureVerdict) -> Agreement:
    """AGREE when both close with the same side count or neither closes.

    A numeric period that properly divides the predicted one is PERIOD_MISMATCH; recognized
    periods are reduced, so this is a real discrepancy rather than a repeated polygon.
    """
    if not analytic.closes:
        return Agreement.DISAGREE if numeric.is_closed else Agreement.AGREE
    if not numeric.is_closed or numeric.n is None or analytic.n is None:
        return Agreement.DISAGREE
    if numeric.n == analytic.n:
        return Agreement.AGREE
    if analytic.n % numeric.n == 0:
        logger.warning("Predicted %s but the chain returns after %d sides", analytic, numeric.n)
        return Agreement.PERIOD_MISMATCH
    return Agreement.DISAGREE


def verdict_agrees(analytic: AnalyticVerdict, numeric: ClosureVerdict) -> bool:
    """True when the numeric chain closes with exactly the predicted count, or neither closes."""
    return compare_verdicts(analytic, numeric) is Agreement.AGREE
