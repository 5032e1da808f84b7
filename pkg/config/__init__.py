"""Configuration package: chain settings and numerical tolerances."""

from config import chain, tolerances

__all__ = ["chain", "tolerances"]
