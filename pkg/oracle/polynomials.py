"""Chebyshev polynomials of both kinds by recursion."""

from functools import lru_cache

import numpy as np

from oracle.models import Poly

_X = Poly(np.array([0.0, 1.0]))


@lru_cache(maxsize=64)
def chebyshev_T(n: int) -> Poly:  # noqa: N802
    """T_n from T_0 = 1, T_1 = x, T_{k+1} = 2x·T_k − T_{k−1}."""
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    prev, cur = Poly(np.array([1.0])), _X
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2.0 * (_X * cur) - prev
    return cur


def chebyshev_Q(n: int) -> Poly:  # noqa: N802
    """Q_{n−1} = T_n′ / n, of degree n − 1."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return chebyshev_T(n).deriv() * (1.0 / n)


def chebyshev_T_values(n: int, x: float | np.ndarray) -> np.ndarray:  # noqa: N802
    """Evaluate T_n at x by running the recurrence on values.

    Stays accurate up to the degree cap where the monomial coefficients of T_n
    have grown past 1e12.
    """
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    xs = np.asarray(x, dtype=float)
    prev, cur = np.ones_like(xs), xs.copy()
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2.0 * xs * cur - prev
    return cur
