"""Deterministic SVG rendering of a scenario and its chains."""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

import drawsvg as draw
import numpy as np

from chains.models import (
    ChainResult,
    PonceletScenario,
    SingularCircumscribed,
    SingularInscribed,
    SmoothSmooth,
    VerdictKind,
)
from geometry.models import Conic, ProjLine, ProjPoint
from workbench.errors import EmptyViewboxError

logger = logging.getLogger(__name__)

BRANCH_SAMPLES = 256
GAMMA_COLOR = "#1f4e9c"
C_COLOR = "#b8322a"
CHAIN_COLOR = "#222222"
SPECIAL_COLOR = "#2a8a3e"
DASH = "6,4"

Point2 = tuple[float, float]
Box = tuple[float, float, float, float]

DEFAULT_VIEWBOX: Box = (-3.0, -3.0, 6.0, 6.0)


@dataclass(frozen=True)
class RenderSpec:
    """Viewbox in world units plus pixel-space styling."""

    viewbox: Box = DEFAULT_VIEWBOX  # x_min, y_min, width, height
    width_px: int = 600
    conic_stroke: float = 2.0
    chain_stroke: float = 1.2
    dot_radius: float = 3.0
    font_size: float = 14.0
    labels: bool = True
    show_conics: bool = True
    show_chain: bool = True
    show_special: bool = True  # dashed exceptional chains
    out: Path | None = None  # render_svg also writes the bytes here when set

    def __post_init__(self) -> None:
        """Reject empty or non-finite viewboxes."""
        x, y, w, h = self.viewbox
        if not all(math.isfinite(v) for v in self.viewbox) or w <= 0 or h <= 0:
            raise EmptyViewboxError(f"viewbox {self.viewbox} has no area")
        if self.width_px < 1:
            raise ValueError(f"width_px must be positive, got {self.width_px}")

    @property
    def bounds(self) -> Box:
        """x_min, y_min, x_max, y_max."""
        x, y, w, h = self.viewbox
        return x, y, x + w, y + h


def _r(value: float) -> float:
    return float(f"{value:.6g}")


def clip_segment(p: Point2, q: Point2, bounds: Box) -> tuple[Point2, Point2, bool, bool] | None:
    """Liang-Barsky clip of pq; flags tell whether each end was moved."""
    x0, y0 = p
    dx, dy = q[0] - x0, q[1] - y0
    lo, hi = 0.0, 1.0
    xmin, ymin, xmax, ymax = bounds
    for step, dist in ((-dx, x0 - xmin), (dx, xmax - x0), (-dy, y0 - ymin), (dy, ymax - y0)):
        if step == 0.0:
            if dist < 0.0:
                return None
            continue
        t = dist / step
        if step < 0.0:
            lo = max(lo, t)
        else:
            hi = min(hi, t)
        if lo > hi:
            return None
    return (x0 + lo * dx, y0 + lo * dy), (x0 + hi * dx, y0 + hi * dy), lo > 0.0, hi < 1.0


def clip_polyline(points: Sequence[Point2], bounds: Box) -> list[list[Point2]]:
    """Visible runs of a polyline."""
    runs: list[list[Point2]] = []
    current: list[Point2] = []
    for p, q in zip(points, points[1:]):
        clipped = clip_segment(p, q, bounds)
        if clipped is None:
            if len(current) > 1:
                runs.append(current)
            current = []
            continue
        start, end, start_moved, end_moved = clipped
        if start_moved or not current:
            if len(current) > 1:
                runs.append(current)
            current = [start]
        current.append(end)
        if end_moved:
            runs.append(current)
            current = []
    if len(current) > 1:
        runs.append(current)
    return runs


def clip_line(ln: ProjLine, bounds: Box) -> tuple[Point2, Point2] | None:
    """Visible segment of a projective line; None for the line at infinity or a miss."""
    u, v, w = ln.unit
    norm2 = u * u + v * v
    if norm2 < 1e-24:
        return None
    xmin, ymin, xmax, ymax = bounds
    foot = np.array([-w * u, -w * v]) / norm2
    direction = np.array([-v, u]) / math.sqrt(norm2)
    center = np.array([(xmin + xmax) / 2.0, (ymin + ymax) / 2.0])
    reach = float(np.linalg.norm(foot - center)) + math.hypot(xmax - xmin, ymax - ymin)
    a, b = foot - reach * direction, foot + reach * direction
    clipped = clip_segment((float(a[0]), float(a[1])), (float(b[0]), float(b[1])), bounds)
    return None if clipped is None else (clipped[0], clipped[1])


def conic_branches(conic: Conic, samples: int = BRANCH_SAMPLES) -> list[list[Point2]]:
    """Affine polylines for each real branch; an ellipse comes back closed."""
    w, q = np.linalg.eigh(conic.m)
    if np.sum(w > 0) == 1:
        w = -w
    neg, p1, p2 = np.argsort(w)
    a = q[:, p1] / math.sqrt(w[p1])
    b = q[:, p2] / math.sqrt(w[p2])
    c = q[:, neg] / math.sqrt(-w[neg])

    radius = math.hypot(a[2], b[2])
    if radius < abs(c[2]) * (1.0 - 1e-12):
        intervals = [(0.0, 2.0 * math.pi, True)]
    else:
        mid = math.atan2(b[2], a[2])
        half = math.acos(max(-1.0, min(1.0, -c[2] / radius)))
        intervals = [
            (mid - half, mid + half, False),
            (mid + half, mid - half + 2.0 * math.pi, False),
        ]

    branches: list[list[Point2]] = []
    for lo, hi, closed in intervals:
        if hi - lo < 1e-9:
            continue
        ks = np.arange(samples) if closed else np.arange(samples) + 0.5
        phi = lo + (hi - lo) * ks / samples
        pts = np.outer(np.cos(phi), a) + np.outer(np.sin(phi), b) + c
        xy = [(float(x / z), float(y / z)) for x, y, z in pts if abs(z) > 1e-12]
        if closed and xy:
            xy.append(xy[0])
        branches.append(xy)
    return branches


def _finite(p: ProjPoint) -> Point2 | None:
    return None if p.is_at_infinity() else p.to_affine()


class _Canvas:
    """World-to-pixel mapping with y pointing up."""

    def __init__(self, spec: RenderSpec) -> None:
        self.spec = spec
        x, y, w, h = spec.viewbox
        self.scale = spec.width_px / w
        self.height_px = _r(h * self.scale)
        self.drawing = draw.Drawing(spec.width_px, self.height_px)
        self.drawing.append(draw.Rectangle(0, 0, spec.width_px, self.height_px, fill="white"))

    def px(self, p: Point2) -> tuple[float, float]:
        xmin, _, _, ymax = self.spec.bounds
        return _r((p[0] - xmin) * self.scale), _r((ymax - p[1]) * self.scale)

    def polyline(self, points: Sequence[Point2], stroke: str, width: float, dashed: bool = False) -> None:
        for run in clip_polyline(points, self.spec.bounds):
            coords = [v for p in run for v in self.px(p)]
            extra = {"stroke_dasharray": DASH} if dashed else {}
            self.drawing.append(
                draw.Lines(*coords, close=False, fill="none", stroke=stroke, stroke_width=width, **extra)
            )

    def line(self, ln: ProjLine, stroke: str, width: float, dashed: bool = False) -> None:
        visible = clip_line(ln, self.spec.bounds)
        if visible is not None:
            self.polyline(list(visible), stroke, width, dashed)

    def dot(self, p: Point2, fill: str, hollow: bool = False) -> None:
        xmin, ymin, xmax, ymax = self.spec.bounds
        if not (xmin <= p[0] <= xmax and ymin <= p[1] <= ymax):
            return
        cx, cy = self.px(p)
        if hollow:
            self.drawing.append(
                draw.Circle(cx, cy, self.spec.dot_radius * 1.5, fill="white", stroke=fill, stroke_width=1.5)
            )
        else:
            self.drawing.append(draw.Circle(cx, cy, self.spec.dot_radius, fill=fill))

    def label(self, p: Point2, text: str, fill: str) -> None:
        xmin, ymin, xmax, ymax = self.spec.bounds
        if not self.spec.labels or not (xmin <= p[0] <= xmax and ymin <= p[1] <= ymax):
            return
        x, y = self.px(p)
        offset = self.spec.dot_radius + 2.0
        self.drawing.append(
            draw.Text(
                text,
                self.spec.font_size,
                _r(x + offset),
                _r(y - offset),
                fill=fill,
                font_family="sans-serif",
            )
        )


def _draw_scenario(canvas: _Canvas, s: PonceletScenario) -> None:
    width = canvas.spec.conic_stroke
    if isinstance(s, (SmoothSmooth, SingularInscribed)):
        for branch in conic_branches(s.gamma):
            canvas.polyline(branch, GAMMA_COLOR, width)
    else:
        for g in s.gamma_lines.lines:
            canvas.line(g, GAMMA_COLOR, width)
        vertex = _finite(s.gamma_lines.vertex)
        if vertex is not None:
            canvas.label(vertex, "V", GAMMA_COLOR)

    if isinstance(s, (SmoothSmooth, SingularCircumscribed)):
        for branch in conic_branches(s.c):
            canvas.polyline(branch, C_COLOR, width)
    else:
        for name, p in zip(("C1", "C2"), s.cstar.points):
            xy = _finite(p)
            if xy is not None:
                canvas.dot(xy, C_COLOR, hollow=True)
                canvas.label(xy, name, C_COLOR)


def _draw_special(canvas: _Canvas, chain: ChainResult) -> None:
    width = canvas.spec.chain_stroke
    first, second = chain.vertices[0], chain.vertices[-1]
    ends = _finite(first), _finite(second)
    if first.is_equivalent(second) or None in ends:
        for side in chain.sides:
            canvas.line(side, SPECIAL_COLOR, width, dashed=True)
    else:
        canvas.polyline(list(ends), SPECIAL_COLOR, width, dashed=True)  # type: ignore[arg-type]
    for xy in ends:
        if xy is not None:
            canvas.dot(xy, SPECIAL_COLOR)


def _draw_chain(canvas: _Canvas, chain: ChainResult) -> None:
    vertices = list(chain.vertices)
    if chain.verdict.kind is VerdictKind.CLOSED:
        vertices.append(vertices[0])
    run: list[Point2] = []
    for p in vertices:
        xy = _finite(p)
        if xy is None:
            canvas.polyline(run, CHAIN_COLOR, canvas.spec.chain_stroke)
            run = []
            continue
        run.append(xy)
    canvas.polyline(run, CHAIN_COLOR, canvas.spec.chain_stroke)
    for p in chain.vertices:
        xy = _finite(p)
        if xy is not None:
            canvas.dot(xy, CHAIN_COLOR)
    start = _finite(chain.vertices[0])
    if start is not None:
        canvas.label(start, "P0", CHAIN_COLOR)


def render_svg(
    s: PonceletScenario, chains: Sequence[ChainResult] = (), spec: RenderSpec | None = None
) -> bytes:
    """SVG bytes for the scenario with its chains; exceptional chains are dashed.

    Output depends only on the inputs: coordinates are rounded to six significant digits.
    Layers switched off in the spec are skipped, and the bytes are also written to
    ``spec.out`` when it is set.
    """
    spec = spec or RenderSpec()
    canvas = _Canvas(spec)
    if spec.show_conics:
        _draw_scenario(canvas, s)
    for chain in chains:
        if chain.verdict.kind is VerdictKind.EXCEPTIONAL:
            if spec.show_special:
                _draw_special(canvas, chain)
        elif spec.show_chain:
            _draw_chain(canvas, chain)
    svg = canvas.drawing.as_svg().encode("utf-8")
    if spec.out is not None:
        spec.out.write_bytes(svg)
        logger.info("Wrote %d bytes of SVG to %s", len(svg), spec.out)
    return svg
