"""Pell oracle tests: Chebyshev polynomials, certificates, α-set bridge, α = 1 witness."""

import math

import numpy as np
import pytest

from oracle.errors import DegreeOutOfRangeError
from oracle.models import Poly
from oracle.pell import (
    MAX_DEGREE,
    alpha_set_bridge,
    pell_alpha_values,
    pell_certificate,
    pell_failure_at_alpha_one,
)
from oracle.polynomials import chebyshev_Q, chebyshev_T, chebyshev_T_values


class TestPoly:
    """Test the Poly wrapper"""

    def test_trims_trailing_zeros(self):
        """Test negligible leading coefficients are dropped"""
        assert Poly(np.array([1.0, 2.0, 0.0, 1e-15])).degree == 1

    def test_arithmetic(self):
        """Test products, sums and scalar multiples"""
        x = Poly(np.array([0.0, 1.0]))
        one = Poly(np.array([1.0]))

        assert ((x + one) * (x - one)).coeffs.tolist() == [-1.0, 0.0, 1.0]
        assert (2.0 * x).coeffs.tolist() == [0.0, 2.0]

    def test_compose_affine(self):
        """Test p(2x + 1) for p(x) = x²"""
        p = Poly(np.array([0.0, 0.0, 1.0]))

        assert p.compose_affine(2.0, 1.0).coeffs.tolist() == pytest.approx([1.0, 4.0, 4.0])

    def test_real_roots_in_window(self):
        """Test (x + 0.5)(x − 2)(x² + 1) keeps only the real root inside [−1, 0]"""
        p = Poly(np.array([-1.0, -1.5, 1.0])) * Poly(np.array([1.0, 0.0, 1.0]))

        assert p.real_roots(-1.0, 0.0) == pytest.approx((-0.5,))
        assert p.real_roots(-1.0, 3.0) == pytest.approx((-0.5, 2.0))
        assert Poly(np.array([3.0])).real_roots(-1.0, 1.0) == ()


class TestChebyshev:
    """Test chebyshev_T and chebyshev_Q"""

    def test_t3(self):
        """Test T₃ = 4x³ − 3x"""
        assert chebyshev_T(3).coeffs.tolist() == [0.0, -3.0, 0.0, 4.0]

    def test_t0(self):
        """Test T₀ = 1"""
        assert chebyshev_T(0).coeffs.tolist() == [1.0]

    def test_q2(self):
        """Test Q₂ = T₃′/3 = 4x² − 1"""
        assert chebyshev_Q(3).coeffs.tolist() == pytest.approx([-1.0, 0.0, 4.0])

    @pytest.mark.parametrize("n", [2, 5, 9])
    def test_cosine_identity(self, n):
        """Test T_n(cos θ) = cos nθ"""
        for theta in (0.1, 0.7, 2.3):
            assert float(chebyshev_T(n)(math.cos(theta))) == pytest.approx(math.cos(n * theta))

    @pytest.mark.parametrize("n", [1, 7, 16, 32])
    def test_values_match_cosine_grid(self, n):
        """Test the value recurrence against cos nφ on 1001 points"""
        phi = np.linspace(0.0, math.pi, 1001)

        assert np.max(np.abs(chebyshev_T_values(n, np.cos(phi)) - np.cos(n * phi))) < 1e-9

    def test_values_agree_with_coefficients(self):
        """Test both evaluations of T₆ agree"""
        xs = np.linspace(-1.0, 1.0, 11)

        np.testing.assert_allclose(chebyshev_T_values(6, xs), chebyshev_T(6)(xs), atol=1e-12)

    def test_negative_degree(self):
        """Test negative degrees are rejected"""
        with pytest.raises(ValueError):
            chebyshev_T(-1)


class TestPellCertificate:
    """Test pell_certificate"""

    @pytest.mark.parametrize("n", [2, 3, 6, 10])
    def test_identity_holds(self, n):
        """Test R² − x(x+1)S² = 1 on [−1, 0]"""
        cert = pell_certificate(n)

        assert cert.max_residual < 1e-6
        assert cert.R.degree == n
        assert cert.S.degree == n - 1

    @pytest.mark.parametrize("n", [3, 5, 8, 10])
    def test_alpha_roots_match_closed_form(self, n):
        """Test the numerically found zeros of S agree with (1 − cos(kπ/n))/2"""
        cert = pell_certificate(n)

        assert len(cert.alpha_roots) == n - 1
        assert cert.alpha_roots == pytest.approx(pell_alpha_values(n), abs=1e-7)
        assert cert.root_gap < 1e-7
        for alpha in cert.alpha_roots:
            assert abs(float(cert.S(-alpha))) < 1e-6

    def test_alpha_values(self):
        """Test (1 − cos(kπ/3))/2"""
        assert pell_alpha_values(3) == pytest.approx((0.25, 0.75))

    @pytest.mark.parametrize("n", [1, MAX_DEGREE + 1])
    def test_degree_out_of_range(self, n):
        """Test degrees outside the supported range"""
        with pytest.raises(DegreeOutOfRangeError):
            pell_certificate(n)


class TestAlphaSetBridge:
    """Test alpha_set_bridge"""

    @pytest.mark.parametrize("n", [3, 4, 7, 12])
    def test_match(self, n):
        """Test cos²(πm/n) and its reflection are Pell values"""
        report = alpha_set_bridge(n)

        assert report.match
        assert report.max_gap < 1e-12

    def test_sets_for_three(self):
        """Test n = 3 relates 1/4 and 3/4"""
        report = alpha_set_bridge(3)

        assert report.theorem_set == pytest.approx((0.25,))
        assert report.reflected_set == pytest.approx((0.75,))
        assert report.pell_set == pytest.approx((0.25, 0.75))

    def test_needs_n_three(self):
        """Test n = 2 has no closing angles to match"""
        with pytest.raises(DegreeOutOfRangeError):
            alpha_set_bridge(2)


class TestPellFailure:
    """Test pell_failure_at_alpha_one"""

    @pytest.mark.parametrize("n", [2, 3, 5, 8])
    def test_witness(self, n):
        """Test the extremal family dips below one just left of −1"""
        failure = pell_failure_at_alpha_one(n)

        assert failure.xi < -1.0
        assert failure.r_squared < 1.0
        assert failure.lhs < 1.0

    @pytest.mark.parametrize("n", [3, 4])
    def test_endpoint_derivative(self, n):
        """Test (T_n(2x + 1))′(−1) = 2(−1)^(n−1)n²"""
        failure = pell_failure_at_alpha_one(n)

        assert failure.endpoint_derivative == pytest.approx(2.0 * (-1) ** (n - 1) * n * n)
