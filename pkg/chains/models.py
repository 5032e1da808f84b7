"""Scenario union, chain state and verdict types."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import ClassVar

from geometry.models import (
    Conic,
    ProjLine,
    ProjPoint,
    ProjTransform,
    SingularConic,
    SingularDualConic,
)
from geometry.projective import apply_transform
from utils.formatting import fmt_affine, fmt_triple


class ScenarioKind(Enum):
    """The four regularity combinations of (Γ, C)."""

    SMOOTH_SMOOTH = "smooth_smooth"
    SINGULAR_INSCRIBED = "singular_inscribed"
    SINGULAR_CIRCUMSCRIBED = "singular_circumscribed"
    BOTH_SINGULAR = "both_singular"


def _require_smooth(conic: Conic, name: str) -> None:
    if not conic.is_regular:
        raise ValueError(f"{name} must be a regular conic, got {conic.kind.value}")
    if conic.is_definite:
        raise ValueError(f"{name} has no real points")


@dataclass(frozen=True)
class SmoothSmooth:
    """Vertices on the smooth conic Γ, sides tangent to the smooth conic C."""

    kind: ClassVar[ScenarioKind] = ScenarioKind.SMOOTH_SMOOTH
    gamma: Conic
    c: Conic

    def __post_init__(self) -> None:
        _require_smooth(self.gamma, "gamma")
        _require_smooth(self.c, "c")

    def transformed(self, t: ProjTransform) -> SmoothSmooth:
        return SmoothSmooth(apply_transform(t, self.gamma), apply_transform(t, self.c))


@dataclass(frozen=True)
class SingularInscribed:
    """Vertices on the smooth conic Γ, sides alternately through C1 and C2."""

    kind: ClassVar[ScenarioKind] = ScenarioKind.SINGULAR_INSCRIBED
    gamma: Conic
    cstar: SingularDualConic

    def __post_init__(self) -> None:
        _require_smooth(self.gamma, "gamma")

    def transformed(self, t: ProjTransform) -> SingularInscribed:
        return SingularInscribed(apply_transform(t, self.gamma), apply_transform(t, self.cstar))


@dataclass(frozen=True)
class SingularCircumscribed:
    """Vertices alternately on g1 and g2, sides tangent to the smooth conic C."""

    kind: ClassVar[ScenarioKind] = ScenarioKind.SINGULAR_CIRCUMSCRIBED
    gamma_lines: SingularConic
    c: Conic

    def __post_init__(self) -> None:
        _require_smooth(self.c, "c")

    def transformed(self, t: ProjTransform) -> SingularCircumscribed:
        return SingularCircumscribed(apply_transform(t, self.gamma_lines), apply_transform(t, self.c))


@dataclass(frozen=True)
class BothSingular:
    """Vertices alternately on g1 and g2, sides alternately through C1 and C2."""

    kind: ClassVar[ScenarioKind] = ScenarioKind.BOTH_SINGULAR
    gamma_lines: SingularConic
    cstar: SingularDualConic

    def transformed(self, t: ProjTransform) -> BothSingular:
        return BothSingular(apply_transform(t, self.gamma_lines), apply_transform(t, self.cstar))


PonceletScenario = SmoothSmooth | SingularInscribed | SingularCircumscribed | BothSingular


@dataclass(frozen=True)
class ChainState:
    """Current vertex, the side that arrived at it, and the active index.

    ``parity`` is the index of the point C_i the incoming side passes through when
    C* is singular and Γ smooth, the index of the line g_i holding the vertex when
    Γ is singular, and 0 otherwise.
    """

    vertex: ProjPoint
    side: ProjLine
    parity: int = 0


class VerdictKind(Enum):
    """Outcome of a chain run."""

    CLOSED = "Closed"
    ASYMPTOTIC_TO_POINT = "AsymptoticToPoint"
    ASYMPTOTIC_TO_SEGMENT = "AsymptoticToSegment"
    DIVERGENT_TO_INFINITY = "DivergentToInfinity"
    BUDGET_EXHAUSTED = "BudgetExhausted"
    EXCEPTIONAL = "Exceptional"  # finite special chain, not an iteration result


def _fmt_point(p: ProjPoint) -> str:
    if p.is_at_infinity():
        return fmt_triple(p.coords)
    return fmt_affine(p.to_affine())


@dataclass(frozen=True)
class ClosureVerdict:
    """Tagged verdict; ``n`` is set for Closed, ``p`` for a point limit, ``v``/``w`` for a segment.

    Limits are the measured vertices. ``matched`` holds, in the same order as the
    limits, the known special point each one was recognized as, or None.
    """

    kind: VerdictKind
    n: int | None = None
    p: ProjPoint | None = None
    v: ProjPoint | None = None
    w: ProjPoint | None = None
    matched: tuple[ProjPoint | None, ...] = ()

    @classmethod
    def closed(cls, n: int) -> ClosureVerdict:
        return cls(VerdictKind.CLOSED, n=n)

    @classmethod
    def asymptotic_to_point(cls, p: ProjPoint, matched: ProjPoint | None = None) -> ClosureVerdict:
        return cls(VerdictKind.ASYMPTOTIC_TO_POINT, p=p, matched=(matched,))

    @classmethod
    def asymptotic_to_segment(
        cls, v: ProjPoint, w: ProjPoint, matched: tuple[ProjPoint | None, ProjPoint | None] = (None, None)
    ) -> ClosureVerdict:
        return cls(VerdictKind.ASYMPTOTIC_TO_SEGMENT, v=v, w=w, matched=matched)

    @classmethod
    def divergent(cls) -> ClosureVerdict:
        return cls(VerdictKind.DIVERGENT_TO_INFINITY)

    @classmethod
    def budget_exhausted(cls) -> ClosureVerdict:
        return cls(VerdictKind.BUDGET_EXHAUSTED)

    @classmethod
    def exceptional(cls) -> ClosureVerdict:
        return cls(VerdictKind.EXCEPTIONAL)

    @property
    def is_closed(self) -> bool:
        return self.kind is VerdictKind.CLOSED

    def sort_key(self) -> tuple[str, int]:
        return self.kind.value, self.n or 0

    def __str__(self) -> str:
        if self.kind is VerdictKind.CLOSED:
            return f"Closed({self.n})"
        if self.kind is VerdictKind.ASYMPTOTIC_TO_POINT and self.p is not None:
            return f"AsymptoticToPoint {_fmt_point(self.p)}"
        if self.kind is VerdictKind.ASYMPTOTIC_TO_SEGMENT and self.v is not None and self.w is not None:
            return f"AsymptoticToSegment {_fmt_point(self.v)} {_fmt_point(self.w)}"
        return self.kind.value


@dataclass(frozen=True)
class ChainResult:
    """Vertices, sides and per-vertex residuals of a chain plus its verdict.

    Closed chains hold n vertices and n sides; open chains hold one more vertex than sides.
    """

    vertices: tuple[ProjPoint, ...]
    sides: tuple[ProjLine, ...]
    verdict: ClosureVerdict
    residuals: tuple[float, ...] = ()

    @property
    def period(self) -> int | None:
        return self.verdict.n if self.verdict.is_closed else None

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)


@dataclass(frozen=True)
class PorismReport:
    """Verdicts of a multi-start run, sorted so the report is independent of run order."""

    verdicts: tuple[ClosureVerdict, ...]
    failures: tuple[str, ...] = ()  # error class names of starts that raised

    @property
    def periods(self) -> tuple[int, ...]:
        return tuple(v.n for v in self.verdicts if v.is_closed and v.n is not None)

    @property
    def consistent(self) -> bool:
        """True when every Closed verdict reports the same n."""
        return len(set(self.periods)) <= 1

    @property
    def closed_count(self) -> int:
        return len(self.periods)
