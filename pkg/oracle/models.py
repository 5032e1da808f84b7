"""Polynomial wrapper and oracle report types."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial

TRIM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Poly:
    """Real polynomial in the monomial basis, coefficients in ascending degree."""

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        """Trim negligible leading coefficients and freeze the array."""
        arr = np.atleast_1d(np.asarray(self.coeffs, dtype=float)).copy()
        scale = float(np.max(np.abs(arr))) if arr.size else 0.0
        end = arr.size
        while end > 1 and abs(arr[end - 1]) <= TRIM_TOL * max(scale, 1.0):
            end -= 1
        arr = arr[:end]
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @classmethod
    def from_numpy(cls, p: Polynomial) -> Poly:
        return cls(p.coef)

    def to_numpy(self) -> Polynomial:
        return Polynomial(self.coeffs)

    @property
    def degree(self) -> int:
        return int(self.coeffs.size - 1)

    def __call__(self, x: float | np.ndarray) -> float | np.ndarray:
        return self.to_numpy()(x)

    def __add__(self, other: Poly) -> Poly:
        return Poly.from_numpy(self.to_numpy() + other.to_numpy())

    def __sub__(self, other: Poly) -> Poly:
        return Poly.from_numpy(self.to_numpy() - other.to_numpy())

    def __mul__(self, other: Poly | float) -> Poly:
        if isinstance(other, Poly):
            return Poly.from_numpy(self.to_numpy() * other.to_numpy())
        return Poly(self.coeffs * float(other))

    __rmul__ = __mul__

    def deriv(self) -> Poly:
        return Poly.from_numpy(self.to_numpy().deriv())

    def compose_affine(self, scale: float, shift: float) -> Poly:
        """p(scale·x + shift)."""
        return Poly.from_numpy(self.to_numpy()(Polynomial([shift, scale])))

    def real_roots(self, lo: float, hi: float, imag_tol: float = 1e-9) -> tuple[float, ...]:
        """Real roots in [lo, hi], ascending; roots with |Im| below imag_tol count as real."""
        if self.degree < 1:
            return ()
        roots = self.to_numpy().roots()
        real = roots[np.abs(roots.imag) < imag_tol].real
        return tuple(float(x) for x in np.sort(real[(real >= lo) & (real <= hi)]))

    def __repr__(self) -> str:
        return f"Poly({np.array2string(self.coeffs, precision=6)})"


@dataclass(frozen=True)
class PellCertificate:
    """R² − x(x+1)S² = 1 checked on a grid over [−1, 0].

    ``alpha_roots`` holds the α ∈ (0, 1) with S(−α) = 0, found numerically and ascending;
    ``root_gap`` is their largest distance from (1 − cos(kπ/n))/2, infinite on a count mismatch.
    """

    n: int
    R: Poly  # noqa: N815
    S: Poly  # noqa: N815
    weight: Poly
    max_residual: float
    alpha_roots: tuple[float, ...]
    root_gap: float


@dataclass(frozen=True)
class BridgeReport:
    """Pell-derived α values against cos²(πm/n) and their reflections 1 − cos²(πm/n)."""

    n: int
    pell_set: tuple[float, ...]
    theorem_set: tuple[float, ...]
    reflected_set: tuple[float, ...]
    max_gap: float
    match: bool


@dataclass(frozen=True)
class PellFailure:
    """Witness that no polynomial solves the Pell equation when α = 1.

    ``derivative_at_minus_one`` is R′(−1) on the family with an interior extremum at
    −1; ``endpoint_derivative`` is (T_n ∘ δ)′(−1) = 2(−1)^(n−1)n², which is not zero.
    """

    n: int
    xi: float
    r_squared: float
    lhs: float
    derivative_at_minus_one: float
    endpoint_derivative: float
