"""User-facing number formatting (six significant digits)."""

from collections.abc import Iterable

SIGNIFICANT_DIGITS = 6


def fmt_float(value: float) -> str:
    """Format a float with six significant digits; negative zero prints as 0."""
    if value == 0:
        return "0"
    return f"{value:.{SIGNIFICANT_DIGITS}g}"


def fmt_triple(values: Iterable[float]) -> str:
    """Format homogeneous coordinates as ``[a:b:c]``."""
    return "[" + ":".join(fmt_float(float(v)) for v in values) + "]"


def fmt_affine(values: Iterable[float]) -> str:
    """Format an affine pair as ``(x, y)``."""
    return "(" + ", ".join(fmt_float(float(v)) for v in values) + ")"
