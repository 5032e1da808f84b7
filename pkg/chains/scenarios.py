"""Scenario builders for the normal forms used by multi-start runs, scans and tests."""

import numpy as np

from chains.models import BothSingular, SingularCircumscribed, SingularInscribed, SmoothSmooth
from geometry.models import Conic, SingularConic, SingularDualConic, line, point
from pencil.models import parabola_matrix, tangent_conic_matrix


def unit_circle() -> Conic:
    return Conic(np.diag([1.0, 1.0, -1.0]))


def circle(radius: float) -> Conic:
    return Conic(np.diag([1.0, 1.0, -radius * radius]))


def tangent_pair_scenario(alpha: float, beta: float, gamma: float) -> SmoothSmooth:
    """Vertices on αy = x² + βxy + γy², sides tangent to y = x²."""
    return SmoothSmooth(gamma=Conic(tangent_conic_matrix(alpha, beta, gamma)), c=Conic(parabola_matrix()))


def concentric_scenario(caustic_radius: float) -> SmoothSmooth:
    """Vertices on the unit circle, sides tangent to a concentric circle."""
    return SmoothSmooth(gamma=unit_circle(), c=circle(caustic_radius))


def singular_inscribed_scenario(alpha: float) -> SingularInscribed:
    """Unit circle with C1 = [1:0:0] and C2 = [α:1:0]."""
    cstar = SingularDualConic(point(1.0, 0.0, 0.0), point(alpha, 1.0, 0.0))
    return SingularInscribed(gamma=unit_circle(), cstar=cstar)


def singular_circumscribed_scenario(alpha: float) -> SingularCircumscribed:
    """Lines x = 0 and αx + y = 0 around the unit circle."""
    lines = SingularConic(line(1.0, 0.0, 0.0), line(alpha, 1.0, 0.0))
    return SingularCircumscribed(gamma_lines=lines, c=unit_circle())


def parallel_lines_scenario(c1_height: float, c2_slope: float) -> BothSingular:
    """Lines y = ±1, C1 = (0, c1_height) and C2 the direction (1, c2_slope)."""
    lines = SingularConic(line(0.0, 1.0, -1.0), line(0.0, 1.0, 1.0))
    cstar = SingularDualConic(point(0.0, c1_height), point(1.0, c2_slope, 0.0))
    return BothSingular(gamma_lines=lines, cstar=cstar)
