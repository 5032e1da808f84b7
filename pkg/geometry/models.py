"""Immutable homogeneous-coordinate types: points, lines, conics and transforms."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import numpy as np

from config.tolerances import DEFAULT_TOLERANCES
from geometry.errors import SingularTransformError


class ConicKind(Enum):
    """Classification of a conic matrix by numerical rank and real factorizability."""

    REGULAR = "Regular"
    TWO_LINES = "TwoLines"
    DOUBLE_LINE = "DoubleLine"
    POINT_OR_EMPTY = "PointOrEmpty"  # rank 2 with complex-conjugate lines


class PointPosition(Enum):
    """Position of a point relative to a regular conic."""

    INSIDE = "Inside"
    ON = "On"
    OUTSIDE = "Outside"


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def normalize_triple(values: object) -> np.ndarray:
    """Return a read-only copy scaled so its largest-magnitude entry is exactly 1."""
    arr = np.asarray(values, dtype=float).reshape(-1)
    if arr.shape != (3,):
        raise ValueError(f"homogeneous triple must have 3 entries, got {arr.shape[0]}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("homogeneous triple must be finite")
    idx = int(np.argmax(np.abs(arr)))
    if arr[idx] == 0.0:
        raise ValueError("homogeneous triple cannot be all zero")
    return _frozen(arr / arr[idx])


def unit(values: np.ndarray) -> np.ndarray:
    """Unit-norm representative of a homogeneous vector."""
    return values / np.linalg.norm(values)


@dataclass(frozen=True, eq=False)
class HomogeneousTriple:
    """Shared behaviour of points and lines: normalized storage and scale-equivalence."""

    coords: np.ndarray

    def __post_init__(self) -> None:
        """Normalize the representative."""
        object.__setattr__(self, "coords", normalize_triple(self.coords))

    def is_equivalent(self, other: HomogeneousTriple, tol: float | None = None) -> bool:
        """True when both triples are equal up to a nonzero scale."""
        tol = DEFAULT_TOLERANCES.incidence if tol is None else tol
        return bool(np.max(np.abs(np.cross(self.coords, other.coords))) < tol)

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.is_equivalent(other)  # type: ignore[arg-type]

    __hash__ = None  # type: ignore[assignment]

    @property
    def unit(self) -> np.ndarray:
        """Unit-norm representative."""
        return unit(self.coords)

    def __iter__(self):
        return iter(float(v) for v in self.coords)

    def __repr__(self) -> str:
        u, v, w = self.coords
        return f"{type(self).__name__}([{u:.6g}:{v:.6g}:{w:.6g}])"


@dataclass(frozen=True, eq=False, repr=False)
class ProjPoint(HomogeneousTriple):
    """Point [x:y:z] of the real projective plane."""

    @classmethod
    def affine(cls, x: float, y: float) -> ProjPoint:
        """Point (x, y) of the chart z = 1."""
        return cls(np.array([x, y, 1.0]))

    def is_at_infinity(self, tol: float | None = None) -> bool:
        """True when the point lies on the line z = 0."""
        tol = DEFAULT_TOLERANCES.incidence if tol is None else tol
        return abs(float(self.coords[2])) < tol

    def to_affine(self) -> tuple[float, float]:
        """Affine coordinates (x/z, y/z); raises ValueError at infinity."""
        if self.is_at_infinity():
            raise ValueError(f"{self!r} is at infinity")
        x, y, z = self.coords
        return float(x / z), float(y / z)


@dataclass(frozen=True, eq=False, repr=False)
class ProjLine(HomogeneousTriple):
    """Line u·x + v·y + w·z = 0."""

    def incident(self, p: ProjPoint, tol: float | None = None) -> bool:
        """True when p lies on the line."""
        tol = DEFAULT_TOLERANCES.incidence if tol is None else tol
        return bool(abs(float(np.dot(self.unit, p.unit))) < tol)


def point(x: float, y: float, z: float = 1.0) -> ProjPoint:
    """Shorthand for ProjPoint([x:y:z])."""
    return ProjPoint(np.array([x, y, z], dtype=float))


def line(u: float, v: float, w: float) -> ProjLine:
    """Shorthand for ProjLine([u:v:w])."""
    return ProjLine(np.array([u, v, w], dtype=float))


def adjugate(m: np.ndarray) -> np.ndarray:
    """Adjugate of a symmetric 3x3 matrix (rows are cross products of the other rows)."""
    return np.array(
        [np.cross(m[1], m[2]), np.cross(m[2], m[0]), np.cross(m[0], m[1])],
        dtype=float,
    )


def _normalize_matrix(m: np.ndarray) -> np.ndarray:
    scale = float(np.max(np.abs(m)))
    if scale == 0.0:
        raise ValueError("matrix cannot be all zero")
    return m / scale


def classify_matrix(m: np.ndarray, rank_tol: float | None = None) -> ConicKind:
    """Kind of a normalized symmetric matrix from its eigenvalues."""
    rank_tol = DEFAULT_TOLERANCES.rank if rank_tol is None else rank_tol
    eig = np.linalg.eigvalsh(m)
    cutoff = rank_tol * float(np.max(np.abs(eig)))
    nonzero = eig[np.abs(eig) > cutoff]
    if nonzero.size == 3:
        return ConicKind.REGULAR
    if nonzero.size == 2:
        return ConicKind.TWO_LINES if nonzero[0] * nonzero[1] < 0 else ConicKind.POINT_OR_EMPTY
    return ConicKind.DOUBLE_LINE


@dataclass(frozen=True, eq=False)
class Conic:
    """Symmetric 3x3 matrix up to scale; normalized so the largest entry has magnitude 1."""

    m: np.ndarray
    kind: ConicKind = field(init=False)

    def __post_init__(self) -> None:
        """Symmetrize, normalize and cache the kind."""
        arr = np.asarray(self.m, dtype=float)
        if arr.shape != (3, 3):
            raise ValueError(f"conic matrix must be 3x3, got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("conic matrix must be finite")
        arr = _normalize_matrix((arr + arr.T) / 2.0)
        object.__setattr__(self, "m", _frozen(arr))
        object.__setattr__(self, "kind", classify_matrix(arr))

    @property
    def is_regular(self) -> bool:
        return self.kind is ConicKind.REGULAR

    @cached_property
    def is_definite(self) -> bool:
        """True for a regular conic with no real points."""
        eig = np.linalg.eigvalsh(self.m)
        return bool(np.all(eig > 0) or np.all(eig < 0))

    @cached_property
    def dual(self) -> np.ndarray:
        """Normalized adjugate: the conic of tangent lines."""
        return _frozen(_normalize_matrix(adjugate(self.m)))

    def is_equivalent(self, other: Conic, tol: float = 1e-8) -> bool:
        """Equality of matrices up to a nonzero (possibly negative) scale."""
        return bool(
            np.max(np.abs(self.m - other.m)) < tol or np.max(np.abs(self.m + other.m)) < tol
        )

    def __repr__(self) -> str:
        return f"Conic(kind={self.kind.value}, m={np.array2string(self.m, precision=6)})"


@dataclass(frozen=True, eq=False)
class ProjTransform:
    """Invertible 3x3 matrix up to scale acting on points, lines and conics."""

    t: np.ndarray

    def __post_init__(self) -> None:
        """Normalize and reject singular matrices."""
        arr = np.asarray(self.t, dtype=float)
        if arr.shape != (3, 3):
            raise ValueError(f"transform matrix must be 3x3, got {arr.shape}")
        arr = _normalize_matrix(arr)
        if abs(float(np.linalg.det(arr))) < 1e-12:
            raise SingularTransformError("transform matrix is singular")
        object.__setattr__(self, "t", _frozen(arr))

    @classmethod
    def identity(cls) -> ProjTransform:
        return cls(np.eye(3))

    @cached_property
    def inv(self) -> np.ndarray:
        """Inverse matrix."""
        return _frozen(np.linalg.inv(self.t))

    def compose(self, first: ProjTransform) -> ProjTransform:
        """Transform applying ``first`` and then ``self``."""
        return ProjTransform(self.t @ first.t)

    def inverse(self) -> ProjTransform:
        return ProjTransform(self.inv)


@dataclass(frozen=True, eq=False)
class SingularConic:
    """Line pair g1 ∪ g2 as a point conic."""

    g1: ProjLine
    g2: ProjLine

    def __post_init__(self) -> None:
        """Reject coincident lines."""
        if self.g1.is_equivalent(self.g2):
            raise ValueError("lines of a singular conic must be distinct")

    @property
    def lines(self) -> tuple[ProjLine, ProjLine]:
        return self.g1, self.g2

    def to_conic(self) -> Conic:
        """Rank-2 matrix of (g1ᵀx)(g2ᵀx) = 0."""
        a, b = self.g1.coords, self.g2.coords
        return Conic(np.outer(a, b) + np.outer(b, a))

    @cached_property
    def vertex(self) -> ProjPoint:
        """Intersection point g1 ∩ g2."""
        return ProjPoint(np.cross(self.g1.coords, self.g2.coords))


@dataclass(frozen=True, eq=False)
class SingularDualConic:
    """Two pencils of lines through the distinct points c1 and c2."""

    c1: ProjPoint
    c2: ProjPoint

    def __post_init__(self) -> None:
        """Reject coincident points."""
        if self.c1.is_equivalent(self.c2):
            raise ValueError("points of a singular dual conic must be distinct")

    @property
    def points(self) -> tuple[ProjPoint, ProjPoint]:
        return self.c1, self.c2

    @cached_property
    def axis(self) -> ProjLine:
        """The line C1C2."""
        return ProjLine(np.cross(self.c1.coords, self.c2.coords))

    def to_dual_conic(self) -> np.ndarray:
        """Rank-2 line-conic matrix: ℓ passes through c1 or c2."""
        a, b = self.c1.coords, self.c2.coords
        return _normalize_matrix(np.outer(a, b) + np.outer(b, a))

    def point_conic(self) -> Conic:
        """Point-conic counterpart: the double line C1C2."""
        axis = self.axis.coords
        return Conic(np.outer(axis, axis))
