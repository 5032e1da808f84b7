"""Polynomial Pell equation on [−1, 0] and its link to the tangent-pair closure angles."""

from __future__ import annotations

import logging
import math

import numpy as np

from oracle.errors import DegreeOutOfRangeError, WitnessNotFoundError
from oracle.models import BridgeReport, PellCertificate, PellFailure, Poly
from oracle.polynomials import chebyshev_Q, chebyshev_T

logger = logging.getLogger(__name__)

MIN_DEGREE = 2
MAX_DEGREE = 32
GRID_POINTS = 1001
BRIDGE_TOL = 1e-12
WITNESS_OFFSET = 1e-4

WEIGHT = Poly(np.array([0.0, 1.0, 1.0]))  # x(x + 1)


def _check_degree(n: int, low: int = MIN_DEGREE) -> None:
    if not low <= n <= MAX_DEGREE:
        raise DegreeOutOfRangeError(f"n must be in [{low}, {MAX_DEGREE}], got {n}")


def pell_alpha_values(n: int) -> tuple[float, ...]:
    """(1 − cos(kπ/n))/2 for k = 1..n−1, ascending."""
    return tuple(sorted((1.0 - math.cos(k * math.pi / n)) / 2.0 for k in range(1, n)))


def pell_residual(r: Poly, s: Poly, grid: np.ndarray) -> float:
    """max |R² − x(x+1)S² − 1| over the grid."""
    values = np.asarray(r(grid)) ** 2 - np.asarray(WEIGHT(grid)) * np.asarray(s(grid)) ** 2 - 1.0
    return float(np.max(np.abs(values)))


def pell_certificate(n: int) -> PellCertificate:
    """R = T_n(2x + 1) with S the least-squares multiple of Q_{n−1}(2x + 1)."""
    _check_degree(n)
    grid = np.linspace(-1.0, 0.0, GRID_POINTS)
    r = chebyshev_T(n).compose_affine(2.0, 1.0)
    base = chebyshev_Q(n).compose_affine(2.0, 1.0)

    # Fit κ² in R² − 1 = κ²·x(x+1)·base².
    design = np.asarray(WEIGHT(grid)) * np.asarray(base(grid)) ** 2
    target = np.asarray(r(grid)) ** 2 - 1.0
    kappa_sq, *_ = np.linalg.lstsq(design[:, None], target, rcond=None)
    s = base * math.sqrt(max(float(kappa_sq[0]), 0.0))

    residual = pell_residual(r, s, grid)
    alphas = tuple(sorted(-x for x in s.real_roots(-1.0, 0.0)))
    expected = pell_alpha_values(n)
    if len(alphas) == len(expected):
        gap = max((abs(a - b) for a, b in zip(alphas, expected)), default=0.0)
    else:
        gap = math.inf
    logger.debug("Pell certificate n=%d: residual %.3g, root gap %.3g", n, residual, gap)
    return PellCertificate(
        n=n, R=r, S=s, weight=WEIGHT, max_residual=residual, alpha_roots=alphas, root_gap=gap
    )


def alpha_set_bridge(n: int) -> BridgeReport:
    """Match cos²(πm/n) with the Pell value at k = n − 2m and 1 − cos²(πm/n) with k = 2m."""
    _check_degree(n, low=3)
    pell = {k: (1.0 - math.cos(k * math.pi / n)) / 2.0 for k in range(1, n)}
    ms = [m for m in range(1, n) if 2 * m < n]
    theorem = [math.cos(math.pi * m / n) ** 2 for m in ms]
    reflected = [1.0 - a for a in theorem]
    gaps = [abs(a - pell[n - 2 * m]) for a, m in zip(theorem, ms)]
    gaps += [abs(a - pell[2 * m]) for a, m in zip(reflected, ms)]
    max_gap = max(gaps)
    return BridgeReport(
        n=n,
        pell_set=tuple(sorted(pell.values())),
        theorem_set=tuple(sorted(theorem)),
        reflected_set=tuple(sorted(reflected)),
        max_gap=max_gap,
        match=max_gap < BRIDGE_TOL,
    )


def pell_failure_at_alpha_one(n: int) -> PellFailure:
    """Exhibit ξ < −1 with R²(ξ) − ξ(ξ+1)S²(ξ) < 1 on the family with R′(−1) = 0.

    The family is T_n(σ(x)) with σ(x) = (1 − cos(π/n))x + 1, which sends −1 to the
    first interior extremum cos(π/n) of T_n and 0 to 1.
    """
    _check_degree(n)
    c = math.cos(math.pi / n)
    t = chebyshev_T(n)
    r = t.compose_affine(1.0 - c, 1.0)
    s = r.deriv() * (1.0 / n)
    derivative = float(r.deriv()(-1.0))
    xi = -1.0 - WITNESS_OFFSET
    r_squared = float(r(xi)) ** 2
    lhs = r_squared - xi * (xi + 1.0) * float(s(xi)) ** 2
    scale = float(np.max(np.abs(r.coeffs)))
    if abs(derivative) > 1e-9 * scale or not r_squared < 1.0 or not lhs < 1.0:
        raise WitnessNotFoundError(
            f"n={n}: R'(-1)={derivative:.3g}, R^2(xi)={r_squared:.17g}, lhs={lhs:.17g}"
        )
    endpoint = float(t.compose_affine(2.0, 1.0).deriv()(-1.0))
    return PellFailure(
        n=n,
        xi=xi,
        r_squared=r_squared,
        lhs=lhs,
        derivative_at_minus_one=derivative,
        endpoint_derivative=endpoint,
    )
