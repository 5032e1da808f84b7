"""CSV export of chain vertices, sides and step residuals."""

from __future__ import annotations

import math
from pathlib import Path

import pandas as pd

from chains.models import ChainResult

CSV_COLUMNS = ["step", "vx", "vy", "vz", "lu", "lv", "lw", "residual"]


def chain_frame(result: ChainResult) -> pd.DataFrame:
    """One row per vertex with its outgoing side; the last vertex of an open chain has none."""
    rows = []
    residuals = result.residuals
    for k, vertex in enumerate(result.vertices):
        vx, vy, vz = vertex.unit
        row = {"step": k, "vx": vx, "vy": vy, "vz": vz, "lu": math.nan, "lv": math.nan, "lw": math.nan}
        if k < len(result.sides):
            row["lu"], row["lv"], row["lw"] = result.sides[k].unit
        row["residual"] = residuals[k] if k < len(residuals) else math.nan
        rows.append(row)
    return pd.DataFrame.from_records(rows, columns=CSV_COLUMNS)


def export_chain_csv(result: ChainResult, path: str | Path | None = None) -> str:
    """Full-precision CSV text with a fixed header; also written to ``path`` when given."""
    text = chain_frame(result).to_csv(index=False, float_format="%.17g", lineterminator="\n")
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
