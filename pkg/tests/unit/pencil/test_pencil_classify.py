"""Classification tests: intersection tags and real base points of conic pairs."""

import pytest

from chains.scenarios import circle, tangent_pair_scenario, unit_circle
from geometry.models import SingularConic, line, point
from geometry.projective import conic_from_coeffs
from pencil.classify import classify_pair
from pencil.models import IntersectionTag


class TestClassifyPair:
    """Test classify_pair tags and base point orders"""

    def test_identical(self):
        """Test a conic against itself"""
        assert classify_pair(unit_circle(), circle(1.0)).tag is IntersectionTag.IDENTICAL

    def test_four_simple(self):
        """Test the unit circle and x²/4 + 4y² = 1 cross four times"""
        ellipse = conic_from_coeffs(0.25, 0, 4, 0, 0, -1)
        info = classify_pair(ellipse, unit_circle())

        assert info.tag is IntersectionTag.FOUR_SIMPLE
        assert info.orders == (1, 1, 1, 1)

    def test_two_double_without_real_contacts(self):
        """Test concentric circles touch twice at complex points"""
        info = classify_pair(circle(0.5), unit_circle())

        assert info.tag is IntersectionTag.TWO_DOUBLE
        assert info.real_base_points == ()

    def test_two_simple_one_double(self):
        """Test a tangent-pair normal form has one contact of order two"""
        s = tangent_pair_scenario(0.25, 1.0, 0.0)
        info = classify_pair(s.c, s.gamma)

        assert info.tag is IntersectionTag.TWO_SIMPLE_ONE_DOUBLE
        assert info.orders == (2, 1, 1)
        assert info.points_of_order(2)[0].is_equivalent(point(0.0, 0.0), 1e-6)

    def test_triple_simple(self, load_figure):
        """Test the triple-contact figure has a base point of order three"""
        s = load_figure("fig_triple").scenario
        info = classify_pair(s.c, s.gamma)

        assert info.tag is IntersectionTag.TRIPLE_SIMPLE
        assert info.orders == (3, 1)
        assert info.spectrum is not None and info.spectrum.pattern == (3,)

    def test_quadruple(self, load_figure):
        """Test the quadruple-contact figure has one base point of order four"""
        s = load_figure("quadruple").scenario
        info = classify_pair(s.c, s.gamma)

        assert info.tag is IntersectionTag.QUADRUPLE
        assert info.orders == (4,)
        assert info.real_base_points[0].point.is_equivalent(point(0.0, 0.0), 1e-6)

    @pytest.mark.parametrize("beta,tag", [(0.7, IntersectionTag.TRIPLE_SIMPLE), (0.0, IntersectionTag.QUADRUPLE)])
    def test_alpha_one_normal_forms(self, beta, tag):
        """Test α = 1 gives a triple point when β ≠ 0 and a quadruple point when β = 0"""
        s = tangent_pair_scenario(1.0, beta, -1.0)

        assert classify_pair(s.c, s.gamma).tag is tag

    def test_singular_member(self):
        """Test a line pair against a circle reports its real crossings"""
        pair = SingularConic(line(1.0, 0.0, 0.0), line(0.0, 1.0, 0.0)).to_conic()
        info = classify_pair(pair, unit_circle())

        assert info.tag is IntersectionTag.HAS_SINGULAR_MEMBER
        assert info.orders == (1, 1, 1, 1)
        assert info.spectrum is None

    def test_two_line_pairs(self):
        """Test two line pairs meet at the crossings of their lines"""
        first = SingularConic(line(1.0, 0.0, 0.0), line(0.0, 1.0, 0.0)).to_conic()
        second = SingularConic(line(1.0, 0.0, -1.0), line(0.0, 1.0, -1.0)).to_conic()
        info = classify_pair(first, second)

        assert info.tag is IntersectionTag.HAS_SINGULAR_MEMBER
        assert len(info.real_base_points) == 4
