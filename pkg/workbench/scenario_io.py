"""JSON scenario documents: parsing with field-path validation and canonical serialization."""

from __future__ import annotations

import dataclasses
import json
import logging
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from chains.models import (
    BothSingular,
    PonceletScenario,
    ScenarioKind,
    SingularCircumscribed,
    SingularInscribed,
    SmoothSmooth,
)
from config.chain import DEFAULT_CHAIN_CONFIG, ChainConfig
from config.tolerances import DEFAULT_TOLERANCES, Tolerances
from geometry.errors import GeometryError
from geometry.models import Conic, ProjLine, ProjPoint, SingularConic, SingularDualConic
from geometry.projective import conic_coeffs, conic_from_coeffs, line_through
from workbench.errors import ScenarioParseError, ScenarioValidationError

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1"

_MEMBERS: dict[ScenarioKind, tuple[str, str]] = {
    ScenarioKind.SMOOTH_SMOOTH: ("gamma", "c"),
    ScenarioKind.SINGULAR_INSCRIBED: ("gamma", "cstar"),
    ScenarioKind.SINGULAR_CIRCUMSCRIBED: ("gamma_lines", "c"),
    ScenarioKind.BOTH_SINGULAR: ("gamma_lines", "cstar"),
}
_COMMON_FIELDS = frozenset(
    {"version", "name", "scenario", "start", "start_param", "reverse", "chain", "tolerances", "render"}
)
_RENDER_FIELDS = frozenset({"viewbox", "special", "labels", "steps"})


@dataclass(frozen=True)
class ScenarioDocument:
    """A parsed scenario plus the run settings stored next to it."""

    scenario: PonceletScenario
    chain: ChainConfig = DEFAULT_CHAIN_CONFIG
    tolerances: Tolerances = DEFAULT_TOLERANCES
    name: str = ""
    start: ProjPoint | None = None
    start_param: float | None = None
    reverse: bool = False
    render: Mapping[str, Any] = field(default_factory=dict)  # viewbox, special, labels, steps


def _number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioValidationError(path, "expected a number")
    if not np.isfinite(value):
        raise ScenarioValidationError(path, "expected a finite number")
    return float(value)


def _numbers(value: Any, path: str, sizes: tuple[int, ...]) -> list[float]:
    if not isinstance(value, list) or len(value) not in sizes:
        wanted = " or ".join(str(n) for n in sizes)
        raise ScenarioValidationError(path, f"expected a list of {wanted} numbers")
    return [_number(v, f"{path}[{i}]") for i, v in enumerate(value)]


def _point(value: Any, path: str) -> ProjPoint:
    coords = _numbers(value, path, (2, 3))
    if len(coords) == 2:
        coords.append(1.0)
    if not any(coords):
        raise ScenarioValidationError(path, "homogeneous coordinates are all zero")
    return ProjPoint(np.array(coords))


def _line(value: Any, path: str) -> ProjLine:
    if isinstance(value, Mapping):
        _reject_unknown(value, frozenset({"through"}), path)
        through = value.get("through")
        if not isinstance(through, list) or len(through) != 2:
            raise ScenarioValidationError(f"{path}.through", "expected two points")
        p, q = (_point(v, f"{path}.through[{i}]") for i, v in enumerate(through))
        try:
            return line_through(p, q)
        except GeometryError as exc:
            raise ScenarioValidationError(f"{path}.through", "points coincide") from exc
    coords = _numbers(value, path, (3,))
    if not any(coords):
        raise ScenarioValidationError(path, "line coordinates are all zero")
    return ProjLine(np.array(coords))


def _conic(value: Any, path: str) -> Conic:
    coeffs = _numbers(value, path, (6,))
    try:
        conic = conic_from_coeffs(*coeffs)
    except GeometryError as exc:
        raise ScenarioValidationError(path, "all coefficients are zero") from exc
    if not conic.is_regular:
        raise ScenarioValidationError(path, f"conic is degenerate ({conic.kind.value})")
    if conic.is_definite:
        raise ScenarioValidationError(path, "conic has no real points")
    return conic


def _pair(value: Any, path: str, parse: Callable[[Any, str], Any]) -> tuple[Any, Any]:
    if not isinstance(value, list) or len(value) != 2:
        raise ScenarioValidationError(path, "expected exactly two entries")
    return parse(value[0], f"{path}[0]"), parse(value[1], f"{path}[1]")


def _line_pair(value: Any, path: str) -> SingularConic:
    g1, g2 = _pair(value, path, _line)
    if g1.is_equivalent(g2):
        raise ScenarioValidationError(path, "lines coincide")
    return SingularConic(g1, g2)


def _point_pair(value: Any, path: str) -> SingularDualConic:
    c1, c2 = _pair(value, path, _point)
    if c1.is_equivalent(c2):
        raise ScenarioValidationError(path, "points coincide")
    return SingularDualConic(c1, c2)


def _reject_unknown(doc: Mapping[str, Any], allowed: frozenset[str], prefix: str = "") -> None:
    for key in sorted(doc):
        if key not in allowed:
            raise ScenarioValidationError(f"{prefix}.{key}" if prefix else key, "unknown field")


def _overrides(value: Any, path: str, base: Any) -> Any:
    if value is None:
        return base
    if not isinstance(value, Mapping):
        raise ScenarioValidationError(path, "expected an object")
    _reject_unknown(value, frozenset(f.name for f in dataclasses.fields(base)), path)
    changes: dict[str, Any] = {}
    for key, raw in value.items():
        if isinstance(getattr(base, key), int):
            if isinstance(raw, bool) or not isinstance(raw, int):
                raise ScenarioValidationError(f"{path}.{key}", "expected an integer")
            changes[key] = raw
        else:
            changes[key] = _number(raw, f"{path}.{key}")
    try:
        return dataclasses.replace(base, **changes)
    except ValueError as exc:
        raise ScenarioValidationError(path, str(exc)) from exc


def _render_options(value: Any) -> dict[str, Any]:
    if value is None:
        return {}
    if not isinstance(value, Mapping):
        raise ScenarioValidationError("render", "expected an object")
    _reject_unknown(value, _RENDER_FIELDS, "render")
    options: dict[str, Any] = {}
    if "viewbox" in value:
        options["viewbox"] = tuple(_numbers(value["viewbox"], "render.viewbox", (4,)))
    for flag in ("special", "labels"):
        if flag in value:
            if not isinstance(value[flag], bool):
                raise ScenarioValidationError(f"render.{flag}", "expected true or false")
            options[flag] = value[flag]
    if "steps" in value:
        steps = value["steps"]
        if isinstance(steps, bool) or not isinstance(steps, int) or steps < 1:
            raise ScenarioValidationError("render.steps", "expected a positive integer")
        options["steps"] = steps
    return options


def _build(kind: ScenarioKind, doc: Mapping[str, Any]) -> PonceletScenario:
    first, second = _MEMBERS[kind]
    for key in (first, second):
        if key not in doc:
            raise ScenarioValidationError(key, "missing field")
    try:
        if kind is ScenarioKind.SMOOTH_SMOOTH:
            return SmoothSmooth(_conic(doc["gamma"], "gamma"), _conic(doc["c"], "c"))
        if kind is ScenarioKind.SINGULAR_INSCRIBED:
            return SingularInscribed(_conic(doc["gamma"], "gamma"), _point_pair(doc["cstar"], "cstar"))
        if kind is ScenarioKind.SINGULAR_CIRCUMSCRIBED:
            return SingularCircumscribed(_line_pair(doc["gamma_lines"], "gamma_lines"), _conic(doc["c"], "c"))
        return BothSingular(_line_pair(doc["gamma_lines"], "gamma_lines"), _point_pair(doc["cstar"], "cstar"))
    except ValueError as exc:
        raise ScenarioValidationError("scenario", str(exc)) from exc


def parse_scenario(text: bytes | str, base: ChainConfig = DEFAULT_CHAIN_CONFIG) -> ScenarioDocument:
    """Parse and validate a scenario document.

    Raises ScenarioParseError for malformed JSON and ScenarioValidationError, carrying
    the offending field path, for everything else.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ScenarioParseError(f"document is not UTF-8: {exc}") from exc
    if not text.strip():
        raise ScenarioParseError("empty document")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ScenarioParseError("top level must be a JSON object")

    if doc.get("version") != SCHEMA_VERSION:
        raise ScenarioValidationError("version", f"expected {SCHEMA_VERSION!r}")
    try:
        kind = ScenarioKind(doc.get("scenario"))
    except ValueError as exc:
        choices = ", ".join(k.value for k in ScenarioKind)
        raise ScenarioValidationError("scenario", f"expected one of {choices}") from exc
    _reject_unknown(doc, _COMMON_FIELDS | frozenset(_MEMBERS[kind]))

    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ScenarioValidationError("name", "expected a string")
    reverse = doc.get("reverse", False)
    if not isinstance(reverse, bool):
        raise ScenarioValidationError("reverse", "expected true or false")
    start = _point(doc["start"], "start") if "start" in doc else None
    start_param = _number(doc["start_param"], "start_param") if "start_param" in doc else None
    if start_param is not None and not 0.0 <= start_param < 1.0:
        raise ScenarioValidationError("start_param", "expected a value in [0, 1)")

    result = ScenarioDocument(
        scenario=_build(kind, doc),
        chain=_overrides(doc.get("chain"), "chain", base),
        tolerances=_overrides(doc.get("tolerances"), "tolerances", DEFAULT_TOLERANCES),
        name=name,
        start=start,
        start_param=start_param,
        reverse=reverse,
        render=_render_options(doc.get("render")),
    )
    logger.debug("Parsed scenario %r (%s)", name, kind.value)
    return result


def load_scenario(path: str | Path, base: ChainConfig = DEFAULT_CHAIN_CONFIG) -> ScenarioDocument:
    return parse_scenario(Path(path).read_bytes(), base)


def _floats(values: Any) -> list[float]:
    return [float(v) for v in values]


def _diff(value: Any, default: Any) -> dict[str, Any]:
    return {
        f.name: getattr(value, f.name)
        for f in dataclasses.fields(value)
        if getattr(value, f.name) != getattr(default, f.name)
    }


def scenario_to_dict(document: ScenarioDocument) -> dict[str, Any]:
    """Canonical JSON-ready form: normalized coordinates, only non-default settings."""
    s = document.scenario
    out: dict[str, Any] = {"version": SCHEMA_VERSION}
    if document.name:
        out["name"] = document.name
    out["scenario"] = s.kind.value
    if isinstance(s, (SmoothSmooth, SingularInscribed)):
        out["gamma"] = _floats(conic_coeffs(s.gamma))
    else:
        out["gamma_lines"] = [_floats(g.coords) for g in s.gamma_lines.lines]
    if isinstance(s, (SmoothSmooth, SingularCircumscribed)):
        out["c"] = _floats(conic_coeffs(s.c))
    else:
        out["cstar"] = [_floats(p.coords) for p in s.cstar.points]
    if document.start is not None:
        out["start"] = _floats(document.start.coords)
    if document.start_param is not None:
        out["start_param"] = document.start_param
    if document.reverse:
        out["reverse"] = True
    chain = _diff(document.chain, DEFAULT_CHAIN_CONFIG)
    if chain:
        out["chain"] = chain
    tolerances = _diff(document.tolerances, DEFAULT_TOLERANCES)
    if tolerances:
        out["tolerances"] = tolerances
    if document.render:
        render = dict(document.render)
        if "viewbox" in render:
            render["viewbox"] = _floats(render["viewbox"])
        out["render"] = render
    return out


def serialize_scenario(document: ScenarioDocument) -> str:
    """Stable JSON text; parsing it back yields the same document."""
    return json.dumps(scenario_to_dict(document), indent=2, sort_keys=True) + "\n"
