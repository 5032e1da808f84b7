"""Poncelet step tests: second intersections, start admissibility, one step per scenario kind."""

import math

import pytest

from chains.errors import BadStartError, NoSecondIntersectionError
from chains.models import ChainState, SingularInscribed, SmoothSmooth
from chains.porism import admissible_starts
from chains.scenarios import (
    circle,
    concentric_scenario,
    parallel_lines_scenario,
    singular_circumscribed_scenario,
    singular_inscribed_scenario,
    tangent_pair_scenario,
    unit_circle,
)
from chains.step import infer_parity, initial_state, poncelet_step, second_intersection, step_residual
from geometry.models import SingularDualConic, line, point
from geometry.projective import chordal_distance


class TestSecondIntersection:
    """Test second_intersection"""

    def test_chord(self):
        """Test x + y = 1 leaves (1, 0) for (0, 1)"""
        nxt = second_intersection(unit_circle(), point(1.0, 0.0), line(1.0, 1.0, -1.0))

        assert nxt.is_equivalent(point(0.0, 1.0), 1e-12)

    def test_tangent_side(self):
        """Test a tangent side has no second point"""
        with pytest.raises(NoSecondIntersectionError):
            second_intersection(unit_circle(), point(1.0, 0.0), line(1.0, 0.0, -1.0))


class TestInitialState:
    """Test initial_state admissibility checks"""

    def test_start_off_gamma(self):
        """Test a start away from Γ is rejected"""
        with pytest.raises(BadStartError):
            initial_state(concentric_scenario(0.5), point(0.3, 0.3))

    def test_start_inside_caustic(self):
        """Test a start with no real tangents is rejected"""
        s = SmoothSmooth(gamma=circle(0.5), c=unit_circle())

        with pytest.raises(BadStartError):
            initial_state(s, point(0.5, 0.0))

    def test_start_at_vertex_of_line_pair(self):
        """Test g1 ∩ g2 is not an admissible start"""
        with pytest.raises(BadStartError):
            initial_state(singular_circumscribed_scenario(0.0), point(0.0, 0.0))

    def test_start_off_both_lines(self):
        """Test a start on neither line is rejected"""
        with pytest.raises(BadStartError):
            initial_state(singular_circumscribed_scenario(0.0), point(1.0, 1.0))

    def test_start_at_c1(self):
        """Test a start at one of the points C1, C2 is rejected"""
        s = SingularInscribed(gamma=unit_circle(), cstar=SingularDualConic(point(1.0, 0.0), point(0.0, 1.0, 0.0)))

        with pytest.raises(BadStartError):
            initial_state(s, point(1.0, 0.0))

    def test_reverse_swaps_incoming_side(self):
        """Test forward and reverse runs leave along different tangents"""
        s = concentric_scenario(0.5)
        forward = initial_state(s, point(1.0, 0.0))
        backward = initial_state(s, point(1.0, 0.0), reverse=True)

        assert not forward.side.is_equivalent(backward.side)


class TestPonceletStep:
    """Test poncelet_step for each scenario kind"""

    def test_smooth_smooth(self):
        """Test a step around r = 1/2 turns the vertex by 120°"""
        s = concentric_scenario(0.5)
        state = poncelet_step(s, initial_state(s, point(1.0, 0.0)))
        x, y = state.vertex.to_affine()

        assert x == pytest.approx(-0.5)
        assert abs(y) == pytest.approx(math.sqrt(3.0) / 2.0)
        assert step_residual(s, state) < 1e-12

    def test_singular_inscribed(self):
        """Test α = 0 reflects through the horizontal direction C1"""
        s = singular_inscribed_scenario(0.0)
        start = initial_state(s, point(0.6, 0.8))
        state = poncelet_step(s, start)

        assert start.parity == 1
        assert state.parity == 0
        assert state.vertex.is_equivalent(point(-0.6, 0.8), 1e-12)

    def test_singular_circumscribed(self):
        """Test the tangent from (0, 2) meets y = 0 at x = ±2/√3"""
        s = singular_circumscribed_scenario(0.0)
        state = poncelet_step(s, initial_state(s, point(0.0, 2.0)))
        x, y = state.vertex.to_affine()

        assert state.parity == 1
        assert y == pytest.approx(0.0, abs=1e-12)
        assert abs(x) == pytest.approx(2.0 / math.sqrt(3.0))

    def test_both_singular(self, load_figure):
        """Test vertices alternate between the two lines"""
        s = load_figure("fig_equal").scenario
        state = initial_state(s, point(0.0, 1.0))
        parities = []
        for _ in range(4):
            state = poncelet_step(s, state)
            parities.append(state.parity)
            assert step_residual(s, state) < 1e-12

        assert parities == [1, 0, 1, 0]


class TestReversibility:
    """Test stepping back from vertex k retraces the chain"""

    @pytest.mark.parametrize(
        "scenario",
        [
            concentric_scenario(0.6),
            tangent_pair_scenario(0.3, 1.0, 0.0),
            singular_inscribed_scenario(2.0),
            singular_circumscribed_scenario(2.0),
            parallel_lines_scenario(0.0, 0.3),
        ],
        ids=["concentric", "tangent-pair", "singular-inscribed", "singular-circumscribed", "both-singular"],
    )
    def test_retraces_vertices(self, scenario):
        """Test k backward steps from the reversed side land on vertices k-1 down to 0"""
        k = 6
        (start,) = admissible_starts(scenario, 1)
        states = [initial_state(scenario, start)]
        for _ in range(k + 1):
            states.append(poncelet_step(scenario, states[-1]))

        vertex, outgoing = states[k].vertex, states[k + 1].side
        back = ChainState(vertex, outgoing, infer_parity(scenario, vertex, outgoing))
        for j in range(k - 1, -1, -1):
            back = poncelet_step(scenario, back)
            assert chordal_distance(back.vertex, states[j].vertex) < 1e-8
