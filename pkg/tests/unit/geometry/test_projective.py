"""Projective operation tests: evaluation, joins, intersections, polarity, tangents, cross ratio."""

import math

import numpy as np
import pytest

from chains.scenarios import unit_circle
from geometry.errors import (
    CoincidentError,
    DegenerateConicError,
    EmptyRealLocusError,
    InvalidConicError,
    LineOnConicError,
    NotCollinearError,
    NotTwoLinesError,
    TooManyCoincidentError,
)
from geometry.models import PointPosition, ProjTransform, SingularConic, line, point
from geometry.projective import (
    apply_transform,
    chordal_distance,
    collinearity_residual,
    conic_coeffs,
    conic_from_coeffs,
    conic_residual,
    cross_ratio,
    eval_point,
    harmonic_conjugate,
    line_conic_intersect,
    line_through,
    meet,
    on_conic,
    point_position,
    polar_line,
    pole,
    split_two_lines,
    tangent_discriminant,
    tangents_from_point,
)


class TestCoefficients:
    """Test the six-coefficient conic form"""

    def test_round_trip(self):
        """Test coefficients survive conic_from_coeffs / conic_coeffs"""
        assert conic_coeffs(conic_from_coeffs(1, 0, 1, 0, 0, -1)) == pytest.approx((1, 0, 1, 0, 0, -1))

    def test_cross_terms_halved(self):
        """Test b, d, e land halved in the off-diagonal entries"""
        conic = conic_from_coeffs(0, 1, 0, 0, 0, 0)

        assert conic.m[0, 1] == pytest.approx(1.0)
        assert conic_coeffs(conic)[1] == pytest.approx(2.0)

    def test_all_zero(self):
        """Test all-zero coefficients raise InvalidConicError"""
        with pytest.raises(InvalidConicError):
            conic_from_coeffs(0, 0, 0, 0, 0, 0)


class TestEvaluation:
    """Test eval_point and residuals"""

    def test_eval_uses_affine_representative(self):
        """Test scaled representatives of a finite point evaluate alike"""
        circle = unit_circle()

        assert eval_point(circle, point(2.0, 0.0)) == pytest.approx(3.0)
        assert eval_point(circle, point(4.0, 0.0, 2.0)) == pytest.approx(3.0)

    def test_on_conic(self):
        """Test on_conic accepts points of the circle only"""
        circle = unit_circle()

        assert on_conic(circle, point(math.sqrt(0.5), math.sqrt(0.5)))
        assert not on_conic(circle, point(0.0, 0.0))
        assert conic_residual(circle, point(0.0, 1.0)) < 1e-15

    def test_chordal_distance_sign_free(self):
        """Test opposite representatives have zero chordal distance"""
        assert chordal_distance(point(1.0, 2.0), point(-1.0, -2.0, -1.0)) < 1e-15
        assert chordal_distance(point(1.0, 0.0), point(-1.0, 0.0)) > 0.1


class TestJoinAndMeet:
    """Test line_through and meet"""

    def test_meet_axes(self):
        """Test x = 0 and y = 0 meet at the origin"""
        assert meet(line(1.0, 0.0, 0.0), line(0.0, 1.0, 0.0)) == point(0.0, 0.0)

    def test_parallel_lines_meet_at_infinity(self):
        """Test parallel lines meet at their common direction"""
        p = meet(line(0.0, 1.0, -1.0), line(0.0, 1.0, 1.0))

        assert p.is_at_infinity()
        assert p == point(1.0, 0.0, 0.0)

    def test_line_through(self):
        """Test the join of (0,1) and (1,0) is x + y = 1"""
        assert line_through(point(0.0, 1.0), point(1.0, 0.0)) == line(1.0, 1.0, -1.0)

    def test_coincident(self):
        """Test coincident inputs raise CoincidentError"""
        with pytest.raises(CoincidentError):
            line_through(point(1.0, 1.0), point(2.0, 2.0, 2.0))
        with pytest.raises(CoincidentError):
            meet(line(1.0, 0.0, 0.0), line(-3.0, 0.0, 0.0))


class TestLineConicIntersect:
    """Test line_conic_intersect"""

    def test_secant(self):
        """Test y = 0 meets the circle at (±1, 0)"""
        hits = line_conic_intersect(line(0.0, 1.0, 0.0), unit_circle())

        assert len(hits) == 2
        assert all(mult == 1 for _, mult in hits)
        points = [p for p, _ in hits]
        assert any(p == point(1.0, 0.0) for p in points)
        assert any(p == point(-1.0, 0.0) for p in points)

    def test_tangent(self):
        """Test y = 1 touches the circle once with multiplicity 2"""
        hits = line_conic_intersect(line(0.0, 1.0, -1.0), unit_circle())

        assert len(hits) == 1
        p, mult = hits[0]
        assert mult == 2
        assert p.is_equivalent(point(0.0, 1.0), 1e-6)

    def test_miss(self):
        """Test y = 2 misses the circle"""
        assert line_conic_intersect(line(0.0, 1.0, -2.0), unit_circle()) == []

    def test_line_component(self):
        """Test a component line of a line pair raises LineOnConicError"""
        pair = conic_from_coeffs(1, 0, -1, 0, 0, 0)

        with pytest.raises(LineOnConicError):
            line_conic_intersect(line(1.0, -1.0, 0.0), pair)

    def test_deterministic_order(self):
        """Test repeated calls return hits in the same order"""
        ln = line(1.0, 2.0, -0.5)
        first = [p.coords.tolist() for p, _ in line_conic_intersect(ln, unit_circle())]
        second = [p.coords.tolist() for p, _ in line_conic_intersect(ln, unit_circle())]

        assert first == second


class TestPolarity:
    """Test polar_line, pole and point_position"""

    def test_polar_of_outside_point(self):
        """Test the polar of (2, 0) is x = 1/2"""
        assert polar_line(unit_circle(), point(2.0, 0.0)) == line(1.0, 0.0, -0.5)

    def test_pole_inverts_polar(self):
        """Test pole(polar(p)) = p"""
        p = point(2.0, 0.0)

        assert pole(unit_circle(), polar_line(unit_circle(), p)) == p

    def test_polar_at_conic_point_is_tangent(self):
        """Test the polar of a point on the circle is its tangent"""
        assert polar_line(unit_circle(), point(0.0, 1.0)) == line(0.0, 1.0, -1.0)

    def test_degenerate_conic(self):
        """Test polarity needs a regular conic"""
        with pytest.raises(DegenerateConicError):
            polar_line(conic_from_coeffs(1, 0, -1, 0, 0, 0), point(1.0, 2.0))

    @pytest.mark.parametrize(
        "p,position",
        [
            (point(0.0, 0.0), PointPosition.INSIDE),
            (point(1.0, 0.0), PointPosition.ON),
            (point(2.0, 0.0), PointPosition.OUTSIDE),
            (point(1.0, 0.0, 0.0), PointPosition.OUTSIDE),
        ],
    )
    def test_point_position(self, p, position):
        """Test the two-tangent position criterion"""
        assert point_position(unit_circle(), p) is position

    def test_position_on_empty_conic(self):
        """Test a definite conic has no inside or outside"""
        with pytest.raises(EmptyRealLocusError):
            point_position(conic_from_coeffs(1, 0, 1, 0, 0, 1), point(0.0, 0.0))

    def test_tangent_discriminant_sign(self):
        """Test the discriminant is positive outside and negative inside"""
        assert tangent_discriminant(unit_circle(), point(3.0, 0.0)) > 0
        assert tangent_discriminant(unit_circle(), point(0.1, 0.0)) < 0

    @pytest.mark.parametrize("phi", [0.0, 0.3, math.pi / 2, 2.0])
    def test_discriminant_vanishes_at_conic(self, phi):
        """Test points closing in on the circle from outside give a discriminant of order t"""
        for t in (1e-2, 1e-4, 1e-6, 1e-8):
            p = point((1.0 + t) * math.cos(phi), (1.0 + t) * math.sin(phi))
            assert 0.0 < tangent_discriminant(unit_circle(), p) < 4.0 * t


class TestTangentsFromPoint:
    """Test tangents_from_point"""

    def test_two_tangents(self):
        """Test (2, 0) has the tangents x ± √3 y = 2"""
        tangents = tangents_from_point(unit_circle(), point(2.0, 0.0))

        assert len(tangents) == 2
        expected = [line(1.0, math.sqrt(3.0), -2.0), line(1.0, -math.sqrt(3.0), -2.0)]
        for ln in tangents:
            assert any(ln.is_equivalent(e, 1e-9) for e in expected)
            assert len(line_conic_intersect(ln, unit_circle())) == 1

    def test_on_conic(self):
        """Test a point on the circle has exactly its tangent"""
        assert tangents_from_point(unit_circle(), point(1.0, 0.0)) == [line(1.0, 0.0, -1.0)]

    def test_inside(self):
        """Test an interior point has no tangents"""
        assert tangents_from_point(unit_circle(), point(0.2, 0.3)) == []

    def test_coincident_roots_merge(self, monkeypatch):
        """Test two tangents equal within the incidence tolerance are reported once"""
        tangent = line(1.0, 0.0, -1.0)
        nearly = line(1.0, 1e-13, -1.0)
        monkeypatch.setattr("geometry.projective.point_position", lambda *_: PointPosition.OUTSIDE)
        monkeypatch.setattr("geometry.projective.tangent_pair", lambda *_: (tangent, nearly))

        assert tangents_from_point(unit_circle(), point(1.0, 1e-7)) == [tangent]


class TestSplitTwoLines:
    """Test split_two_lines"""

    def test_split(self):
        """Test x² − y² splits into x − y and x + y"""
        lines = split_two_lines(conic_from_coeffs(1, 0, -1, 0, 0, 0))
        expected = [line(1.0, -1.0, 0.0), line(1.0, 1.0, 0.0)]

        assert all(any(ln == e for e in expected) for ln in lines)
        assert not lines[0].is_equivalent(lines[1])

    def test_split_inverts_to_conic(self):
        """Test splitting the matrix of a line pair recovers its lines"""
        pair = SingularConic(line(1.0, 2.0, -3.0), line(0.5, -1.0, 4.0))
        lines = split_two_lines(pair.to_conic())

        assert any(ln == pair.g1 for ln in lines)
        assert any(ln == pair.g2 for ln in lines)

    @pytest.mark.parametrize("coeffs", [(1, 0, 1, 0, 0, -1), (1, 0, 1, 0, 0, 0), (1, 0, 0, 0, 0, 0)])
    def test_not_two_lines(self, coeffs):
        """Test regular, empty-pair and double-line conics are rejected"""
        with pytest.raises(NotTwoLinesError):
            split_two_lines(conic_from_coeffs(*coeffs))


class TestCrossRatio:
    """Test cross_ratio and harmonic_conjugate"""

    def test_equally_spaced(self):
        """Test parameters 0, 1, 2, 3 give 4/3"""
        pts = [point(float(t), 0.0) for t in range(4)]

        assert cross_ratio(*pts) == pytest.approx(4.0 / 3.0)

    def test_harmonic_quadruple(self):
        """Test (1, −2; 4, 0) is harmonic"""
        pts = [point(x, 0.0) for x in (1.0, -2.0, 4.0, 0.0)]

        assert cross_ratio(*pts) == pytest.approx(-1.0)

    def test_point_at_infinity(self):
        """Test the cross ratio handles an ideal point on the line"""
        pts = [point(0.0, 0.0), point(1.0, 0.0), point(2.0, 0.0), point(1.0, 0.0, 0.0)]

        # (0, 1; 2, ∞) = (2 − 0)/(2 − 1)
        assert cross_ratio(*pts) == pytest.approx(2.0)

    def test_infinite_value(self):
        """Test p1 ≡ p4 gives an infinite cross ratio"""
        a, b, c = point(0.0, 0.0), point(1.0, 0.0), point(2.0, 0.0)

        assert math.isinf(cross_ratio(a, b, c, a))

    def test_not_collinear(self):
        """Test four non-collinear points are rejected"""
        with pytest.raises(NotCollinearError):
            cross_ratio(point(0.0, 0.0), point(1.0, 0.0), point(2.0, 0.0), point(0.0, 1.0))

    def test_too_many_coincident(self):
        """Test two distinct points are not enough"""
        a, b = point(0.0, 0.0), point(1.0, 0.0)

        with pytest.raises(TooManyCoincidentError):
            cross_ratio(a, b, a, b)

    def test_harmonic_conjugate(self):
        """Test the fourth harmonic of 1, −2, 4 is the origin"""
        h = harmonic_conjugate(point(1.0, 0.0), point(-2.0, 0.0), point(4.0, 0.0))

        assert h.is_equivalent(point(0.0, 0.0), 1e-9)

    def test_harmonic_conjugate_of_midpoint_is_ideal(self):
        """Test the harmonic conjugate of a midpoint lies at infinity"""
        h = harmonic_conjugate(point(0.0, 1.0), point(0.0, 3.0), point(0.0, 2.0))

        assert h.is_at_infinity(1e-9)

    def test_harmonic_conjugate_coincident(self):
        """Test repeated inputs raise CoincidentError"""
        with pytest.raises(CoincidentError):
            harmonic_conjugate(point(1.0, 0.0), point(1.0, 0.0), point(2.0, 0.0))

    def test_collinearity_residual(self):
        """Test collinear points have a negligible residual"""
        assert collinearity_residual([point(0.0, 0.0), point(1.0, 1.0), point(-2.0, -2.0)]) < 1e-12
        assert collinearity_residual([point(0.0, 0.0), point(1.0, 0.0), point(0.0, 1.0)]) > 0.1


class TestApplyTransform:
    """Test apply_transform"""

    TRANSLATE = ProjTransform(np.array([[1.0, 0.0, 1.0], [0.0, 1.0, 2.0], [0.0, 0.0, 1.0]]))

    def test_point(self):
        """Test a translation moves the origin to (1, 2)"""
        assert apply_transform(self.TRANSLATE, point(0.0, 0.0)) == point(1.0, 2.0)

    def test_line(self):
        """Test x = 0 moves to x = 1"""
        assert apply_transform(self.TRANSLATE, line(1.0, 0.0, 0.0)) == line(1.0, 0.0, -1.0)

    def test_conic(self):
        """Test the unit circle moves to the circle centred at (1, 2)"""
        moved = apply_transform(self.TRANSLATE, unit_circle())

        assert on_conic(moved, point(2.0, 2.0))
        assert on_conic(moved, point(1.0, 3.0))

    def test_incidence_preserved(self):
        """Test a point on a line stays on the image line"""
        t = ProjTransform(np.array([[2.0, 1.0, 0.0], [0.0, 1.0, 3.0], [1.0, 0.0, 1.0]]))
        ln = line(1.0, 1.0, -1.0)
        p = point(0.25, 0.75)

        assert apply_transform(t, ln).incident(apply_transform(t, p))

    def test_unsupported_type(self):
        """Test unsupported objects raise TypeError"""
        with pytest.raises(TypeError):
            apply_transform(self.TRANSLATE, "circle")  # type: ignore[call-overload]
