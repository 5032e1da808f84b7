"""SVG rendering tests: clipping, conic branches, figure output, determinism."""

import logging
import math

import pytest

from chains.scenarios import circle
from chains.special import degenerate_special_chains
from geometry.models import line
from geometry.projective import conic_from_coeffs
from tests.factories import make_concentric, make_open_chain
from workbench.errors import EmptyViewboxError
from workbench.figures import render_document
from workbench.render import RenderSpec, clip_line, clip_polyline, clip_segment, conic_branches, render_svg

BOUNDS = (-1.0, -1.0, 1.0, 1.0)


class TestRenderSpec:
    """Test RenderSpec validation"""

    @pytest.mark.parametrize(
        "viewbox", [(0.0, 0.0, 0.0, 1.0), (0.0, 0.0, 1.0, -1.0), (0.0, 0.0, math.inf, 1.0)]
    )
    def test_empty_viewbox(self, viewbox):
        """Test zero, negative and infinite extents"""
        with pytest.raises(EmptyViewboxError):
            RenderSpec(viewbox=viewbox)

    def test_bad_width(self):
        """Test the pixel width must be positive"""
        with pytest.raises(ValueError):
            RenderSpec(width_px=0)

    def test_bounds(self):
        """Test bounds are min and max corners"""
        assert RenderSpec(viewbox=(-2.0, -1.0, 4.0, 3.0)).bounds == (-2.0, -1.0, 2.0, 2.0)


class TestClipping:
    """Test segment, polyline and line clipping"""

    def test_segment_inside(self):
        """Test an inner segment is unchanged"""
        assert clip_segment((-0.5, 0.0), (0.5, 0.0), BOUNDS) == ((-0.5, 0.0), (0.5, 0.0), False, False)

    def test_segment_crossing(self):
        """Test a crossing segment is cut at the box edge"""
        start, end, start_moved, end_moved = clip_segment((0.0, 0.0), (2.0, 0.0), BOUNDS)

        assert start == (0.0, 0.0)
        assert end == pytest.approx((1.0, 0.0))
        assert not start_moved
        assert end_moved

    def test_segment_outside(self):
        """Test a segment that misses the box"""
        assert clip_segment((2.0, 2.0), (3.0, 2.0), BOUNDS) is None

    def test_polyline_split(self):
        """Test leaving and re-entering the box yields two runs"""
        runs = clip_polyline([(-0.5, 0.0), (0.5, 0.0), (0.5, 3.0), (-0.5, 3.0), (-0.5, 0.5)], BOUNDS)

        assert len(runs) == 2
        assert runs[0][0] == (-0.5, 0.0)
        assert runs[1][-1] == (-0.5, 0.5)

    def test_line(self):
        """Test the x axis crosses the whole box"""
        visible = clip_line(line(0.0, 1.0, 0.0), BOUNDS)

        assert visible is not None
        xs = sorted(p[0] for p in visible)
        assert xs == pytest.approx([-1.0, 1.0])

    def test_line_at_infinity(self):
        """Test the line at infinity is not drawn"""
        assert clip_line(line(0.0, 0.0, 1.0), BOUNDS) is None


class TestConicBranches:
    """Test conic_branches"""

    def test_ellipse_single_closed_branch(self):
        """Test a circle is one closed polyline on the curve"""
        branches = conic_branches(circle(1.0), samples=64)

        assert len(branches) == 1
        assert len(branches[0]) == 65
        assert branches[0][0] == branches[0][-1]
        for x, y in branches[0]:
            assert math.hypot(x, y) == pytest.approx(1.0)

    def test_hyperbola_two_branches(self):
        """Test x² − y² = 1 comes back as two open branches"""
        branches = conic_branches(conic_from_coeffs(1.0, 0.0, -1.0, 0.0, 0.0, -1.0), samples=64)

        assert len(branches) == 2
        for branch in branches:
            assert len(branch) == 64
            signs = {math.copysign(1.0, x) for x, _ in branch}
            assert len(signs) == 1
            for x, y in branch:
                assert x * x - y * y == pytest.approx(1.0, rel=1e-9)


class TestRenderSvg:
    """Test render_svg and render_document"""

    def test_bare_scenario(self):
        """Test a scenario without chains renders both conics"""
        svg = render_svg(make_concentric()).decode("utf-8")

        assert svg.startswith("<?xml")
        assert svg.count("#1f4e9c") == 1
        assert svg.count("#b8322a") == 1
        assert "<circle" not in svg

    def test_open_chain_dots(self):
        """Test every visible vertex gets a dot and P0 a label"""
        svg = render_svg(make_concentric(), [make_open_chain()]).decode("utf-8")

        assert svg.count("<circle") == 3
        assert ">P0<" in svg

    def test_no_labels(self):
        """Test labels can be switched off"""
        svg = render_svg(make_concentric(), [make_open_chain()], RenderSpec(labels=False)).decode("utf-8")

        assert "<text" not in svg

    def test_closed_figure(self, load_figure):
        """Test the stored triangle figure draws three vertices"""
        svg = render_document(load_figure("fig_double_triangle")).decode("utf-8")

        assert svg.count("<circle") == 3
        assert "stroke-dasharray" not in svg

    def test_special_chain_dashed(self, load_figure):
        """Test a figure asking for its exceptional chain draws it dashed"""
        svg = render_document(load_figure("fig_equal")).decode("utf-8")

        assert "stroke-dasharray" in svg
        assert ">C1<" in svg

    def test_special_missing_is_logged(self, load_figure, caplog):
        """Test smooth pairs have no exceptional chain to add"""
        with caplog.at_level(logging.WARNING, logger="workbench.figures"):
            svg = render_document(load_figure("fig_double_triangle"), special=True)

        assert b"stroke-dasharray" not in svg
        assert "No special chain to draw" in caplog.text

    def test_without_chain(self, load_figure):
        """Test chain=False draws only the members"""
        svg = render_document(load_figure("fig_double_triangle"), chain=False).decode("utf-8")

        assert "<circle" not in svg

    def test_viewbox_override(self, load_figure):
        """Test an empty viewbox argument is rejected"""
        with pytest.raises(EmptyViewboxError):
            render_document(load_figure("fig_double_triangle"), viewbox=(0.0, 0.0, 0.0, 1.0))

    def test_deterministic(self, load_figure):
        """Test the same figure renders to the same bytes"""
        doc = load_figure("fig_harmonic")

        assert render_document(doc) == render_document(doc)


class TestRenderLayers:
    """Test RenderSpec layer toggles and output path"""

    def test_chain_layer_off(self):
        """Test show_chain=False drops chain vertices and labels"""
        svg = render_svg(make_concentric(), [make_open_chain()], RenderSpec(show_chain=False)).decode("utf-8")

        assert "<circle" not in svg
        assert ">P0<" not in svg

    def test_special_layer_off(self, load_figure):
        """Test show_special=False drops the dashed exceptional chains only"""
        doc = load_figure("fig_equal")
        special = degenerate_special_chains(doc.scenario, doc.tolerances)

        shown = render_svg(doc.scenario, special).decode("utf-8")
        hidden = render_svg(doc.scenario, special, RenderSpec(show_special=False)).decode("utf-8")

        assert "stroke-dasharray" in shown
        assert "stroke-dasharray" not in hidden
        assert ">C1<" in hidden

    def test_out_path(self, tmp_path):
        """Test the SVG is written to spec.out and returned unchanged"""
        target = tmp_path / "figure.svg"
        svg = render_svg(make_concentric(), spec=RenderSpec(out=target))

        assert target.read_bytes() == svg

    def test_document_out_path(self, load_figure, tmp_path):
        """Test render_document passes its output path through"""
        target = tmp_path / "harmonic.svg"
        svg = render_document(load_figure("fig_harmonic"), out=target)

        assert target.read_bytes() == svg
