"""Characteristic cubic det(C + λΓ), its clustered roots and the invariant α."""

import logging
import math

import numpy as np
from numpy.polynomial import polynomial as P

from config.tolerances import DEFAULT_TOLERANCES, Tolerances
from geometry.models import Conic
from pencil.errors import (
    DegenerateConfigurationError,
    IdenticalConicsError,
    WrongMultiplicityPatternError,
)
from pencil.models import PencilSpectrum, RootCluster

logger = logging.getLogger(__name__)

_TRIPLE_VALUE_REL = 1e-9
_TRIPLE_SLOPE_REL = 1e-8
_LEADING_REL = 1e-12


def _det_with_columns(a: np.ndarray, b: np.ndarray, from_b: tuple[int, ...]) -> float:
    cols = [b[:, j] if j in from_b else a[:, j] for j in range(3)]
    return float(np.linalg.det(np.column_stack(cols)))


def pencil_char_poly(c: Conic, g: Conic) -> tuple[float, float, float, float]:
    """Coefficients of det(c.m + λ·g.m) for λ⁰..λ³."""
    a, b = c.m, g.m
    c1 = sum(_det_with_columns(a, b, (j,)) for j in range(3))
    c2 = sum(_det_with_columns(a, b, pair) for pair in ((0, 1), (0, 2), (1, 2)))
    return float(np.linalg.det(a)), c1, c2, float(np.linalg.det(b))


def _newton_on_derivative(cubic: np.ndarray, root: float) -> float:
    """One Newton step on p' to polish a double root."""
    d1 = P.polyder(cubic)
    d2 = P.polyder(d1)
    curvature = P.polyval(root, d2)
    if curvature == 0.0:
        return root
    return root - P.polyval(root, d1) / curvature


def _triple_root(cubic: np.ndarray) -> float | None:
    c2, c3 = cubic[2], cubic[3]
    r = -c2 / (3.0 * c3)
    magnitude = sum(abs(cf) * abs(r) ** k for k, cf in enumerate(cubic))
    slope_mag = sum(k * abs(cf) * abs(r) ** (k - 1) for k, cf in enumerate(cubic) if k)
    value = P.polyval(r, cubic)
    slope = P.polyval(r, P.polyder(cubic))
    if abs(value) <= _TRIPLE_VALUE_REL * magnitude and abs(slope) <= _TRIPLE_SLOPE_REL * slope_mag:
        return float(r)
    return None


def _cluster(
    cubic: np.ndarray, roots: np.ndarray, tol: Tolerances
) -> list[RootCluster]:
    remaining = sorted(roots.tolist(), key=lambda z: (z.real, z.imag))
    clusters: list[RootCluster] = []
    while remaining:
        z = remaining.pop(0)
        partner = next(
            (w for w in remaining if abs(w - z) < tol.root_cluster * (1.0 + abs(z))),
            None,
        )
        if partner is not None:
            remaining.remove(partner)
            mean = (z + partner) / 2.0
            value = _newton_on_derivative(cubic, float(mean.real))
            clusters.append(RootCluster(value=value, multiplicity=2))
        elif abs(z.imag) <= tol.root_cluster * (1.0 + abs(z)):
            clusters.append(RootCluster(value=float(z.real), multiplicity=1))
        else:
            clusters.append(RootCluster(value=float(z.real), multiplicity=1, imag=float(z.imag)))
    return clusters


def spectrum_from_cubic(
    cubic: tuple[float, float, float, float], tol: Tolerances = DEFAULT_TOLERANCES
) -> PencilSpectrum:
    """Cluster the roots of a cubic given by ascending coefficients."""
    coeffs = np.asarray(cubic, dtype=float)
    scale = float(np.max(np.abs(coeffs)))
    if scale == 0.0:
        raise DegenerateConfigurationError("every member of the pencil is singular")
    coeffs = coeffs / scale

    degree = 3
    while degree > 0 and abs(coeffs[degree]) < _LEADING_REL:
        degree -= 1
    at_infinity = 3 - degree

    clusters: list[RootCluster] = []
    if degree == 3:
        triple = _triple_root(coeffs)
        if triple is not None:
            clusters = [RootCluster(value=triple, multiplicity=3)]
        else:
            clusters = _cluster(coeffs, P.polyroots(coeffs), tol)
    elif degree > 0:
        reduced = coeffs[: degree + 1]
        clusters = _cluster(reduced, P.polyroots(reduced), tol)
    if at_infinity:
        clusters.append(RootCluster(value=math.inf, multiplicity=at_infinity))

    clusters.sort(key=lambda r: (r.value, r.imag))
    c0, c1, c2, c3 = (float(v) for v in cubic)
    spectrum = PencilSpectrum(cubic=(c0, c1, c2, c3), roots=tuple(clusters))
    logger.debug("Pencil spectrum pattern %s roots %s", spectrum.pattern, spectrum.roots)
    return spectrum


def pencil_spectrum(c: Conic, g: Conic, tol: Tolerances = DEFAULT_TOLERANCES) -> PencilSpectrum:
    """Roots of det(C + λΓ) with multiplicities, ascending."""
    if c.is_equivalent(g):
        raise IdenticalConicsError("conics coincide up to scale")
    return spectrum_from_cubic(pencil_char_poly(c, g), tol)


def alpha_from_spectrum(s: PencilSpectrum) -> float:
    """Ratio λ_simple / λ_double of a (1, 2) spectrum."""
    simple = [r for r in s.roots if r.multiplicity == 1]
    double = [r for r in s.roots if r.multiplicity == 2]
    if len(simple) != 1 or len(double) != 1:
        raise WrongMultiplicityPatternError(f"expected one simple and one double root, got {s.pattern}")
    lam_s, lam_d = simple[0], double[0]
    if not (lam_s.is_real and lam_s.is_finite and lam_d.is_finite):
        raise WrongMultiplicityPatternError("roots must be real and finite")
    if lam_s.value == 0.0 or lam_d.value == 0.0:
        raise WrongMultiplicityPatternError("roots must be nonzero")
    return lam_s.value / lam_d.value
