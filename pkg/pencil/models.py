"""Result types for pencil spectra, intersection classification and normal forms."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from geometry.models import Conic, ProjPoint, ProjTransform


class IntersectionTag(Enum):
    """Configuration of the four intersection points of a conic pair."""

    FOUR_SIMPLE = "FourSimple"
    TWO_SIMPLE_ONE_DOUBLE = "TwoSimpleOneDouble"
    TWO_DOUBLE = "TwoDouble"
    TRIPLE_SIMPLE = "TripleSimple"
    QUADRUPLE = "Quadruple"
    HAS_SINGULAR_MEMBER = "HasSingularMember"
    IDENTICAL = "Identical"


@dataclass(frozen=True)
class RootCluster:
    """Root of det(C + λΓ) with multiplicity; value is +inf for a root at infinity."""

    value: float
    multiplicity: int
    imag: float = 0.0  # nonzero for one member of a complex-conjugate pair

    @property
    def is_real(self) -> bool:
        return self.imag == 0.0

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.value)


@dataclass(frozen=True)
class PencilSpectrum:
    """Coefficients of det(C + λΓ) (ascending powers of λ) and their clustered roots."""

    cubic: tuple[float, float, float, float]
    roots: tuple[RootCluster, ...]

    def __post_init__(self) -> None:
        """Check that multiplicities account for all three roots."""
        total = sum(r.multiplicity for r in self.roots)
        if total != 3:
            raise ValueError(f"root multiplicities must sum to 3, got {total}")

    @property
    def pattern(self) -> tuple[int, ...]:
        """Multiplicities in descending order, e.g. (2, 1)."""
        return tuple(sorted((r.multiplicity for r in self.roots), reverse=True))

    @property
    def real_roots(self) -> tuple[RootCluster, ...]:
        return tuple(r for r in self.roots if r.is_real and r.is_finite)


@dataclass(frozen=True)
class BasePoint:
    """Real common point of the pair and its intersection order."""

    point: ProjPoint
    order: int


@dataclass(frozen=True)
class IntersectionType:
    """Classification of a conic pair with its real base points."""

    tag: IntersectionTag
    real_base_points: tuple[BasePoint, ...] = ()
    spectrum: PencilSpectrum | None = None
    degenerate_members: tuple[Conic, ...] = ()  # pencil members used for the base points

    def __post_init__(self) -> None:
        """Orders of real base points never exceed four."""
        total = sum(bp.order for bp in self.real_base_points)
        if total > 4:
            raise ValueError(f"base point orders sum to {total} > 4")

    def points_of_order(self, order: int) -> tuple[ProjPoint, ...]:
        return tuple(bp.point for bp in self.real_base_points if bp.order == order)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(sorted((bp.order for bp in self.real_base_points), reverse=True))


def parabola_matrix() -> np.ndarray:
    """Matrix of y = x² (as -x² + yz = 0)."""
    return np.array([[-1.0, 0.0, 0.0], [0.0, 0.0, 0.5], [0.0, 0.5, 0.0]])


def tangent_conic_matrix(alpha: float, beta: float, gamma: float) -> np.ndarray:
    """Matrix of αy = x² + βxy + γy², sign-matched to parabola_matrix."""
    return np.array(
        [
            [-1.0, -beta / 2.0, 0.0],
            [-beta / 2.0, -gamma, alpha / 2.0],
            [0.0, alpha / 2.0, 0.0],
        ]
    )


@dataclass(frozen=True)
class TangentPairNormalForm:
    """Pair with a contact of order 2 carried to y = x² and αy = x² + βxy + γy².

    ``transform`` maps the original plane to the normal-form chart; ``contact`` is the
    original touching point T (sent to the origin).
    """

    alpha: float
    beta: float
    gamma: float
    transform: ProjTransform
    contact: ProjPoint

    def __post_init__(self) -> None:
        """The contact must be of order exactly two."""
        if self.alpha == 1.0:
            raise ValueError("alpha = 1 means contact of order higher than 2")

    @property
    def condition_b(self) -> float:
        """β² − 4γ(1 − α); positive when real closed chains can exist."""
        return self.beta**2 - 4.0 * self.gamma * (1.0 - self.alpha)

    def conics(self) -> tuple[Conic, Conic]:
        """The normal-form parabola and second conic."""
        return (
            Conic(parabola_matrix()),
            Conic(tangent_conic_matrix(self.alpha, self.beta, self.gamma)),
        )


@dataclass(frozen=True)
class SpectralCurve:
    """Curve μ² = ¼(1 + λ)(1 + αλ)² with its node and rational normalization.

    The normalization is λ = λ₁, μ = ½μ₁(1 + αλ₁) with μ₁² = 1 + λ₁. The node at
    λ = −1/α lifts to μ₁ = ±μₙ with μₙ = √(1 − 1/α). The multiplier (1 + μₙ)/(1 − μₙ)
    has modulus one when 0 < α < 1 and is real when α > 1.
    """

    alpha: float
    cubic: tuple[float, float, float, float]
    double_point: tuple[float, float]
    node_lift: complex
    multiplier: complex
    node_is_split: bool = field(default=False)  # real node branches: asymptotic regime

    @property
    def rotation_angle(self) -> float:
        """Argument of the multiplier in [0, 2π); zero when the node is split."""
        if self.node_is_split:
            return 0.0
        return cmath.phase(self.multiplier) % (2.0 * math.pi)

    def lift(self, lambda1: float, mu1: float) -> tuple[float, float]:
        """Image (λ, μ) of a normalization point (λ₁, μ₁)."""
        return lambda1, 0.5 * mu1 * (1.0 + self.alpha * lambda1)

    def residual(self, lam: float, mu: float) -> float:
        """μ² − ¼(1 + λ)(1 + αλ)²."""
        return mu * mu - 0.25 * (1.0 + lam) * (1.0 + self.alpha * lam) ** 2


@dataclass(frozen=True)
class SingularInscribedNormalForm:
    """Smooth Γ sent to the unit circle with C1 → [1:0:0] and C2 → [α:1:0]."""

    alpha: float
    transform: ProjTransform


@dataclass(frozen=True)
class SingularCircumscribedNormalForm:
    """Smooth C sent to the unit circle with g1 → x = 0 and g2 → αx + y = 0."""

    alpha: float
    transform: ProjTransform


@dataclass(frozen=True)
class BothSingularNormalForm:
    """Chart where g1 ∥ g2 and C2 is at infinity.

    d1, d2 are Euclidean distances from the image of C1 to the images of g1, g2 in
    this chart; only their (in)equality is meaningful. D1, D2 are the original
    points g1 ∩ C1C2 and g2 ∩ C1C2.
    """

    transform: ProjTransform
    d1: float
    d2: float
    D1: ProjPoint  # noqa: N815
    D2: ProjPoint  # noqa: N815

    def is_centered(self, tol: float = 1e-9) -> bool:
        """True when C1 is equally distant from both lines."""
        return abs(self.d1 - self.d2) <= tol * max(1.0, self.d1, self.d2)
