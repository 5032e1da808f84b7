"""Running and drawing the chain stored with a scenario document."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from pathlib import Path

from chains.errors import NoAdmissibleStartError, NoneExistsError
from chains.models import ChainResult, SingularInscribed, SmoothSmooth
from chains.porism import admissible_starts, conic_point_at, line_point_at
from chains.runner import run_chain
from chains.special import degenerate_special_chains
from config.chain import ChainConfig
from geometry.models import ProjPoint
from workbench.render import DEFAULT_VIEWBOX, RenderSpec, render_svg
from workbench.scenario_io import ScenarioDocument

logger = logging.getLogger(__name__)


def resolve_start(doc: ScenarioDocument) -> ProjPoint:
    """The document's start, else its start_param sample, else the first admissible start."""
    s = doc.scenario
    if doc.start is not None:
        return doc.start
    if doc.start_param is not None:
        if isinstance(s, (SmoothSmooth, SingularInscribed)):
            return conic_point_at(s.gamma, doc.start_param)
        return line_point_at(s.gamma_lines.g1, doc.start_param)
    starts = admissible_starts(s, 1, doc.chain.seed, doc.tolerances)
    if not starts:
        raise NoAdmissibleStartError(f"no admissible start for {s.kind.value}")
    return starts[0]


def run_document(
    doc: ScenarioDocument,
    start: ProjPoint | None = None,
    reverse: bool = False,
    cfg: ChainConfig | None = None,
) -> ChainResult:
    return run_chain(
        doc.scenario,
        start if start is not None else resolve_start(doc),
        cfg or doc.chain,
        reverse=reverse or doc.reverse,
        tol=doc.tolerances,
    )


def render_document(
    doc: ScenarioDocument,
    viewbox: Sequence[float] | None = None,
    steps: int | None = None,
    special: bool | None = None,
    labels: bool = True,
    chain: bool = True,
    out: Path | None = None,
) -> bytes:
    """SVG of the document's figure; arguments override the document's render options."""
    options = doc.render
    frame = DEFAULT_VIEWBOX
    box = viewbox or options.get("viewbox")
    if box:
        x, y, w, h = box
        frame = (x, y, w, h)
    show_special = options.get("special", False) if special is None else special
    spec = RenderSpec(
        viewbox=frame,
        labels=labels and options.get("labels", True),
        show_chain=chain,
        show_special=show_special,
        out=out,
    )

    chains: list[ChainResult] = []
    if spec.show_chain:
        cfg = doc.chain.with_overrides(max_steps=steps or options.get("steps"))
        chains.append(run_document(doc, cfg=cfg))
    if spec.show_special:
        try:
            chains.extend(degenerate_special_chains(doc.scenario, doc.tolerances))
        except NoneExistsError as exc:
            logger.warning("No special chain to draw: %s", exc)
    return render_svg(doc.scenario, chains, spec)
