"""Closed-form closure conditions for each degenerate configuration."""

from __future__ import annotations

import math

from closure.errors import AlphaDegenerateError, NegativeAlphaError, WrongTypeError
from closure.models import DEFAULT_N_MAX, AnalyticVerdict, NeverClosesReason
from config.tolerances import DEFAULT_TOLERANCES, Tolerances
from geometry.models import SingularDualConic
from geometry.projective import cross_ratio
from pencil.models import BothSingularNormalForm, IntersectionTag, IntersectionType


def recognize_cos_squared(alpha: float, n_max: int, tol: float) -> tuple[int, int] | None:
    """Smallest (n, m) with 3 ≤ n ≤ n_max, 1 ≤ m, 2m < n and α = cos²(πm/n) within tol."""
    for n in range(3, n_max + 1):
        for m in range(1, (n + 1) // 2):
            if abs(alpha - math.cos(math.pi * m / n) ** 2) < tol:
                return n, m
    return None


def tangent_pair_condition(
    alpha: float,
    beta: float,
    gamma: float,
    n_max: int = DEFAULT_N_MAX,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> AnalyticVerdict:
    """Closure for a pair with one contact of order two, in normal form.

    Needs α = cos²(πm/n) and β² − 4γ(1 − α) > 0.
    """
    if alpha == 0.0 or alpha == 1.0:
        raise AlphaDegenerateError(f"α = {alpha} does not describe an order-2 contact")
    hit = recognize_cos_squared(alpha, n_max, tol.recognition)
    if hit is None:
        return AnalyticVerdict.never_closes(NeverClosesReason.NOT_ROOT_OF_UNITY)
    if beta * beta - 4.0 * gamma * (1.0 - alpha) <= 0.0:
        return AnalyticVerdict.never_closes(NeverClosesReason.CONDITION_B_FAILS)
    n, m = hit
    return AnalyticVerdict.closes_at(n, m)


def high_order_condition(t: IntersectionType) -> AnalyticVerdict:
    """A contact of order three or four admits no closed chains."""
    if t.tag not in (IntersectionTag.TRIPLE_SIMPLE, IntersectionTag.QUADRUPLE):
        raise WrongTypeError(f"expected TripleSimple or Quadruple, got {t.tag.value}")
    return AnalyticVerdict.never_closes(NeverClosesReason.HIGH_ORDER_CONTACT)


def angle_between_directions(alpha: float) -> float:
    """arctan(1/α), with π/2 at α = 0."""
    if alpha < 0.0:
        raise NegativeAlphaError(f"α must be non-negative, got {alpha}")
    return math.pi / 2.0 if alpha == 0.0 else math.atan(1.0 / alpha)


def _angle_gap(a: float, b: float) -> float:
    """Distance between two line directions, modulo π."""
    return abs((a - b + math.pi / 2.0) % math.pi - math.pi / 2.0)


def _with_side_count(verdict: AnalyticVerdict, sides: int | None) -> AnalyticVerdict:
    """Restrict a singular-member verdict to chains with exactly ``sides`` sides."""
    if sides is None:
        return verdict
    if sides % 2:
        return AnalyticVerdict.never_closes(NeverClosesReason.ODD_EXCLUDED)
    if verdict.closes and verdict.n != sides:
        return AnalyticVerdict.never_closes(NeverClosesReason.NOT_ROOT_OF_UNITY)
    return verdict


def singular_inscribed_condition(
    alpha: float,
    n_max: int = DEFAULT_N_MAX,
    tol: Tolerances = DEFAULT_TOLERANCES,
    sides: int | None = None,
) -> AnalyticVerdict:
    """Closed with 2n sides iff arctan(1/α) = kπ/n with k coprime to n.

    With ``sides`` the question becomes whether a chain with that many sides closes;
    an odd count is NeverCloses(OddExcluded) whatever α is.
    """
    theta = angle_between_directions(alpha)
    for n in range(2, n_max + 1):
        for k in range(1, n):
            if math.gcd(k, n) == 1 and abs(theta - k * math.pi / n) < tol.recognition:
                return _with_side_count(AnalyticVerdict.closes_at(2 * n, k), sides)
    return _with_side_count(AnalyticVerdict.never_closes(NeverClosesReason.NOT_ROOT_OF_UNITY), sides)


def singular_circumscribed_condition(
    alpha: float,
    n_max: int = DEFAULT_N_MAX,
    tol: Tolerances = DEFAULT_TOLERANCES,
    sides: int | None = None,
) -> AnalyticVerdict:
    """Closed with 2n sides iff arctan(1/α) ≡ 2kπ/n (mod π) with k coprime to n.

    ``sides`` restricts the verdict the same way as for the inscribed member.
    """
    theta = angle_between_directions(alpha)
    for n in range(2, n_max + 1):
        for k in range(1, n):
            if math.gcd(k, n) == 1 and _angle_gap(theta, 2 * k * math.pi / n) < tol.recognition:
                return _with_side_count(AnalyticVerdict.closes_at(2 * n, k), sides)
    return _with_side_count(AnalyticVerdict.never_closes(NeverClosesReason.NOT_ROOT_OF_UNITY), sides)


def both_singular_condition(
    form: BothSingularNormalForm,
    cstar: SingularDualConic,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> AnalyticVerdict:
    """Quadrangles close iff (C1, C2; D1, D2) = −1."""
    ratio = cross_ratio(cstar.c1, cstar.c2, form.D1, form.D2, tol)
    if math.isfinite(ratio) and abs(ratio + 1.0) < tol.recognition:
        return AnalyticVerdict.closes_at(4)
    return AnalyticVerdict.never_closes(NeverClosesReason.CROSS_RATIO_NOT_HARMONIC)
