"""Scenario files, SVG figures, CSV export and parameter scans."""

from workbench.errors import EmptyViewboxError, ScenarioParseError, ScenarioValidationError, WorkbenchError
from workbench.export import CSV_COLUMNS, chain_frame, export_chain_csv
from workbench.figures import render_document, resolve_start, run_document
from workbench.render import RenderSpec, conic_branches, render_svg
from workbench.scan import ScanFamily, ScanRow, alpha_scan, scan_frame, scan_singular, scan_tangent
from workbench.scenario_io import (
    ScenarioDocument,
    load_scenario,
    parse_scenario,
    scenario_to_dict,
    serialize_scenario,
)

__all__ = [
    "CSV_COLUMNS",
    "EmptyViewboxError",
    "RenderSpec",
    "ScanFamily",
    "ScanRow",
    "ScenarioDocument",
    "ScenarioParseError",
    "ScenarioValidationError",
    "WorkbenchError",
    "alpha_scan",
    "chain_frame",
    "conic_branches",
    "export_chain_csv",
    "load_scenario",
    "render_document",
    "parse_scenario",
    "render_svg",
    "resolve_start",
    "run_document",
    "scan_frame",
    "scan_singular",
    "scan_tangent",
    "scenario_to_dict",
    "serialize_scenario",
]
