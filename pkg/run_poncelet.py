"""Command-line entry point for the Poncelet workbench.

Notes:
    Each subcommand reads one scenario file (except ``scan`` and ``oracle``), prints
    its result on stdout and returns an exit code: 0 on success (including
    never-closing verdicts), 1 on a computation error, 2 on a usage or input error.
    The closure tolerance default can be overridden with ``PONCELET_TOL``.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from dotenv import load_dotenv

from chains.errors import BadStartError, NoAdmissibleStartError
from chains.models import (
    PonceletScenario,
    SingularCircumscribed,
    SingularInscribed,
    SmoothSmooth,
)
from chains.porism import porism_probe
from closure.models import DEFAULT_N_MAX
from closure.predict import compare_verdicts, predict
from config.chain import ChainConfig
from geometry.errors import GeometryError
from geometry.models import Conic, ProjPoint
from geometry.projective import cross_ratio
from oracle.errors import OracleError
from oracle.pell import alpha_set_bridge, pell_certificate, pell_failure_at_alpha_one
from pencil.classify import classify_pair
from pencil.normal_forms import (
    normalize_both_singular,
    normalize_singular_circumscribed,
    normalize_singular_inscribed,
    normalize_tangent_pair,
    spectral_curve,
)
from utils.formatting import fmt_affine, fmt_float, fmt_triple
from utils.logging import setup_logging
from workbench.errors import WorkbenchError
from workbench.export import export_chain_csv
from workbench.figures import render_document, run_document
from workbench.scan import ScanFamily, scan_singular, scan_tangent
from workbench.scenario_io import ScenarioDocument, load_scenario

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_COMPUTATION = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Bad command-line input detected after argument parsing."""

    pass


def _floats(raw: str, sizes: tuple[int, ...], option: str) -> list[float]:
    try:
        values = [float(part) for part in raw.split(",")]
    except ValueError as exc:
        raise UsageError(f"{option} expects comma-separated numbers, got {raw!r}") from exc
    if len(values) not in sizes:
        wanted = " or ".join(str(n) for n in sizes)
        raise UsageError(f"{option} expects {wanted} numbers, got {len(values)}")
    return values


def _point_conics(s: PonceletScenario) -> tuple[Conic, Conic]:
    """(c, gamma) as point conics; C* becomes the double line C1C2."""
    c = s.c if isinstance(s, (SmoothSmooth, SingularCircumscribed)) else s.cstar.point_conic()
    gamma = s.gamma if isinstance(s, (SmoothSmooth, SingularInscribed)) else s.gamma_lines.to_conic()
    return c, gamma


def _parse_start(raw: str) -> ProjPoint:
    values = _floats(raw, (2, 3), "--start")
    if len(values) == 2:
        values.append(1.0)
    if not any(values):
        raise UsageError("--start cannot be all zero")
    return ProjPoint(values)


def cmd_classify(doc: ScenarioDocument, _args: argparse.Namespace) -> int:
    c, gamma = _point_conics(doc.scenario)
    info = classify_pair(c, gamma, doc.tolerances)
    print(f"scenario: {doc.scenario.kind.value}")
    print(f"type: {info.tag.value}")
    for bp in info.real_base_points:
        print(f"base point: {fmt_triple(bp.point.coords)} order {bp.order}")
    if info.spectrum is not None:
        roots = []
        for r in info.spectrum.roots:
            value = fmt_float(r.value) if r.is_real else f"{fmt_float(r.value)}±{fmt_float(abs(r.imag))}i"
            roots.append(f"{value} (x{r.multiplicity})")
        print(f"spectrum: {', '.join(roots)}")
        print(f"pattern: {info.spectrum.pattern}")
    return EXIT_OK


def cmd_normalize(doc: ScenarioDocument, _args: argparse.Namespace) -> int:
    s, tol = doc.scenario, doc.tolerances
    if isinstance(s, SmoothSmooth):
        form = normalize_tangent_pair(s.c, s.gamma, tol)
        print(f"alpha: {fmt_float(form.alpha)}")
        print(f"beta: {fmt_float(form.beta)}")
        print(f"gamma: {fmt_float(form.gamma)}")
        print(f"condition_b: {fmt_float(form.condition_b)}")
        print(f"contact: {fmt_triple(form.contact.coords)}")
        if form.alpha > 0:
            curve = spectral_curve(form)
            print(f"node split: {'yes' if curve.node_is_split else 'no'}")
            print(f"rotation angle: {fmt_float(curve.rotation_angle)}")
    elif isinstance(s, SingularInscribed):
        print(f"alpha: {fmt_float(normalize_singular_inscribed(s.gamma, s.cstar, tol).alpha)}")
    elif isinstance(s, SingularCircumscribed):
        print(f"alpha: {fmt_float(normalize_singular_circumscribed(s.c, s.gamma_lines, tol).alpha)}")
    else:
        both = normalize_both_singular(s.gamma_lines, s.cstar, tol)
        ratio = cross_ratio(s.cstar.c1, s.cstar.c2, both.D1, both.D2, tol)
        print(f"d1: {fmt_float(both.d1)}")
        print(f"d2: {fmt_float(both.d2)}")
        print(f"D1: {fmt_triple(both.D1.coords)}")
        print(f"D2: {fmt_triple(both.D2.coords)}")
        print(f"cross ratio: {fmt_float(ratio)}")
        print(f"centered: {'yes' if both.is_centered() else 'no'}")
    return EXIT_OK


def cmd_chain(doc: ScenarioDocument, args: argparse.Namespace) -> int:
    cfg = doc.chain.with_overrides(max_steps=args.max_steps)
    if args.starts > 1:
        report = porism_probe(
            doc.scenario, cfg, n_starts=args.starts, workers=args.workers, tol=doc.tolerances
        )
        for verdict in report.verdicts:
            print(f"verdict: {verdict}")
        for failure in report.failures:
            print(f"failure: {failure}")
        print(f"consistent: {'yes' if report.consistent else 'no'}")
        return EXIT_OK

    start = _parse_start(args.start) if args.start is not None else None
    result = run_document(doc, start, args.reverse, cfg)
    print(f"verdict: {result.verdict}")
    for limit in result.verdict.matched:
        print(f"matched: {_fmt_point(limit) if limit is not None else 'none'}")
    print(f"steps: {len(result.sides)}")
    print(f"start: {_fmt_point(result.vertices[0])}")
    print(f"max residual: {fmt_float(result.max_residual)}")
    if args.csv:
        export_chain_csv(result, args.csv)
        logger.info("Wrote %d rows to %s", len(result.vertices), args.csv)
    return EXIT_OK


def _fmt_point(p: ProjPoint) -> str:
    return fmt_triple(p.coords) if p.is_at_infinity() else fmt_affine(p.to_affine())


def cmd_check(doc: ScenarioDocument, args: argparse.Namespace) -> int:
    analytic = predict(doc.scenario, args.n_max, doc.tolerances, args.sides)
    if not args.verify:
        print(f"analytic: {analytic}")
        return EXIT_OK
    try:
        numeric = run_document(doc).verdict
    except (BadStartError, NoAdmissibleStartError) as exc:
        outcome = "DISAGREE" if analytic.closes else "AGREE"
        print(f"analytic: {analytic}; numeric: {type(exc).__name__}; {outcome}")
        return EXIT_OK
    outcome = compare_verdicts(analytic, numeric).name
    print(f"analytic: {analytic}; numeric: {numeric}; {outcome}")
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    cfg = ChainConfig.from_env().with_overrides(max_steps=args.max_steps)
    family = ScanFamily(args.case)
    if family is ScanFamily.TANGENT:
        table = scan_tangent(
            args.alpha_min, args.alpha_max, args.steps, args.beta, args.gamma, cfg, args.n_max, args.workers
        )
    else:
        table = scan_singular(
            family, args.alpha_min, args.alpha_max, args.steps, cfg, args.n_max, args.workers
        )
    print(table.to_string(index=False, float_format=fmt_float))
    return EXIT_OK


def cmd_render(doc: ScenarioDocument, args: argparse.Namespace) -> int:
    viewbox = _floats(args.viewbox, (4,), "--viewbox") if args.viewbox else None
    render_document(
        doc,
        viewbox=viewbox,
        steps=args.steps,
        special=True if args.special else None,
        labels=not args.no_labels,
        chain=not args.no_chain,
        out=Path(args.out),
    )
    print(f"wrote: {args.out}")
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    cert = pell_certificate(args.n)
    print(f"n: {cert.n}")
    print(f"R: {cert.R}")
    print(f"S: {cert.S}")
    print(f"max residual: {fmt_float(cert.max_residual)}")
    print(f"alpha_roots: {', '.join(fmt_float(a) for a in cert.alpha_roots)}")
    print(f"root gap: {fmt_float(cert.root_gap)}")
    if args.n >= 3:
        bridge = alpha_set_bridge(args.n)
        print(f"theorem alphas: {', '.join(fmt_float(a) for a in bridge.theorem_set)}")
        print(f"reflected alphas: {', '.join(fmt_float(a) for a in bridge.reflected_set)}")
        print(f"bridge: {'match' if bridge.match else 'mismatch'} (max gap {fmt_float(bridge.max_gap)})")
    if args.witness:
        failure = pell_failure_at_alpha_one(args.n)
        print(f"witness xi: {fmt_float(failure.xi)}")
        print(f"witness lhs: {fmt_float(failure.lhs)}")
        print(f"endpoint derivative: {fmt_float(failure.endpoint_derivative)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="run_poncelet", description="Poncelet chains for degenerate conic pairs"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("classify", "intersection type and pencil spectrum"),
        ("normalize", "normal-form parameters"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")

    chain = sub.add_parser("chain", help="run a Poncelet chain")
    chain.add_argument("file")
    chain.add_argument("--start", help="X,Y or X,Y,Z")
    chain.add_argument("--max-steps", type=int)
    chain.add_argument("--csv", help="write vertices, sides and residuals to this CSV file")
    chain.add_argument("--reverse", action="store_true", help="start along the other tangent")
    chain.add_argument("--starts", type=int, default=1, help="run this many quasi-random starts")
    chain.add_argument("--workers", type=int)

    check = sub.add_parser("check", help="closed-form closure verdict")
    check.add_argument("file")
    check.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    check.add_argument("--sides", type=int, help="ask about one side count (singular members)")
    check.add_argument("--verify", action="store_true", help="compare with a numeric chain")

    scan = sub.add_parser("scan", help="analytic vs numeric verdicts over an α grid")
    scan.add_argument("--case", choices=[f.value for f in ScanFamily], default=ScanFamily.TANGENT.value)
    scan.add_argument("--alpha-min", type=float, required=True)
    scan.add_argument("--alpha-max", type=float, required=True)
    scan.add_argument("--steps", type=int, required=True)
    scan.add_argument("--beta", type=float, default=1.0)
    scan.add_argument("--gamma", type=float, default=0.0)
    scan.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    scan.add_argument("--max-steps", type=int)
    scan.add_argument("--workers", type=int)

    render = sub.add_parser("render", help="write an SVG figure")
    render.add_argument("file")
    render.add_argument("--out", required=True)
    render.add_argument("--viewbox", help="XMIN,YMIN,WIDTH,HEIGHT")
    render.add_argument("--steps", type=int, help="chain step budget for the figure")
    render.add_argument("--special", action="store_true", help="add the exceptional chains")
    render.add_argument("--no-chain", action="store_true")
    render.add_argument("--no-labels", action="store_true")

    oracle = sub.add_parser("oracle", help="Pell certificate and α-set bridge")
    oracle.add_argument("--n", type=int, required=True)
    oracle.add_argument("--witness", action="store_true", help="also show the α = 1 failure witness")
    return parser


_FILE_COMMANDS = {
    "classify": cmd_classify,
    "normalize": cmd_normalize,
    "chain": cmd_chain,
    "check": cmd_check,
    "render": cmd_render,
}


def cli_main(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv`` and run one subcommand; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        if args.command == "scan":
            return cmd_scan(args)
        if args.command == "oracle":
            return cmd_oracle(args)
        doc = load_scenario(args.file, ChainConfig.from_env())
        return _FILE_COMMANDS[args.command](doc, args)
    except (UsageError, WorkbenchError, OSError, ValueError) as exc:
        logger.error("%s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GeometryError, OracleError) as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION
    except Exception as exc:
        logger.exception("Unhandled exception in %s: %s", args.command, exc)
        return EXIT_COMPUTATION


def main() -> int:
    load_dotenv(override=True)
    setup_logging()
    return cli_main()


if __name__ == "__main__":
    sys.exit(main())
