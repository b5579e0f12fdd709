"""
Unit tests for DistortionService
"""

from unittest.mock import Mock

import numpy as np
import pytest

from vpflab.core.errors import TruncationError, ValidationError
from vpflab.models.ar_params import ARParams
from vpflab.models.laplacian_params import LaplacianParams
from vpflab.models.quant_mode import QuantMode
from vpflab.models.quant_spec import QuantSpec
from vpflab.models.truncation_policy import TruncationPolicy
from vpflab.models.weighting_matrix import WeightingMatrix
from vpflab.services.distortion_service import DistortionService
from vpflab.services.mode_probability import p_pmb_first
from vpflab.utils.logger import Logger


@pytest.fixture
def mock_logger():
    """Create mock logger"""
    return Mock(spec=Logger)


@pytest.fixture
def service(mock_logger):
    """Create closed-form distortion service"""
    return DistortionService(logger=mock_logger)


@pytest.fixture
def quadrature(mock_logger):
    """Create quadrature distortion service"""
    return DistortionService(method="quadrature", logger=mock_logger)


class TestDistortionService:
    """Test analytic distortion"""

    def test_unknown_method(self, mock_logger):
        """Test that unknown integration methods are rejected"""
        with pytest.raises(ValidationError):
            DistortionService(method="simpson", logger=mock_logger)

    def test_huge_step_gives_source_variance(self, service):
        """Everything falls in the deadzone, so the distortion is the source variance"""
        src = LaplacianParams(0.0, 2500.0)
        assert service.distortion_intra(1e6, 1.0, src) == pytest.approx(2500.0, rel=1e-6)
        assert service.distortion_inter(1e6, 2.0, src) == pytest.approx(2500.0, rel=1e-6)

    def test_small_step_high_rate(self, service):
        """Centered intra cells approach delta^2/12"""
        src = LaplacianParams(0.0, 2500.0)
        assert service.distortion_intra(1.0, 1.0, src) == pytest.approx(1.0 / 12.0, rel=0.05)

    @pytest.mark.parametrize(
        "delta,alpha,sigma2,mode",
        [
            (16.0, 1.25, 2500.0, QuantMode.INTRA),
            (8.0, 2.0, 100.0, QuantMode.INTER),
            (62.0, 1.0, 2500.0, QuantMode.INTER),
        ],
    )
    def test_matches_monte_carlo(self, service, delta, alpha, sigma2, mode):
        """Analytic value sits within 3 standard errors of a Monte Carlo estimate"""
        spec = QuantSpec(q=2, alpha=alpha, weight=4 * delta, mode=mode)
        src = LaplacianParams(0.0, sigma2)
        analytic = service.distortion(spec, src)
        estimate, se = service.monte_carlo_distortion(spec, src, 2**20, seed=11)
        assert abs(analytic - estimate) <= 3 * se

    @pytest.mark.parametrize("mode", [QuantMode.INTRA, QuantMode.INTER])
    @pytest.mark.parametrize("mu", [0.0, 7.5, -30.0])
    def test_exact_matches_quadrature(self, service, quadrature, mode, mu):
        """Closed-form and quadrature routes agree, including a shifted mean"""
        spec = QuantSpec(q=8, alpha=1.25, mode=mode)
        src = LaplacianParams(mu, 400.0)
        assert service.distortion(spec, src) == pytest.approx(
            quadrature.distortion(spec, src), rel=1e-7
        )

    def test_nondecreasing_in_q(self, service):
        """Coarser steps never reduce the distortion"""
        src = LaplacianParams(0.0, 2500.0)
        values = [service.distortion(QuantSpec.intra(q, 1.25), src) for q in (2, 8, 16, 31)]
        assert all(a <= b for a, b in zip(values, values[1:]))

    def test_truncation_budget(self, service):
        """Test that an exhausted term budget raises instead of returning a partial sum"""
        src = LaplacianParams(0.0, 2500.0)
        with pytest.raises(TruncationError) as exc_info:
            service.distortion_intra(4.0, 1.0, src, TruncationPolicy(max_terms=1))
        assert exc_info.value.terms > 1

    def test_invalid_arguments(self, service):
        src = LaplacianParams(0.0, 2500.0)
        with pytest.raises(ValidationError):
            service.distortion_intra(0.0, 1.0, src)
        with pytest.raises(ValidationError):
            service.distortion_inter(4.0, 2.5, src)

    def test_monte_carlo_count(self, service):
        with pytest.raises(ValidationError):
            service.monte_carlo_distortion(QuantSpec.intra(4, 1.0), LaplacianParams(), 1, seed=0)

    def test_logs_evaluation(self, service, mock_logger):
        service.distortion(QuantSpec.intra(4, 1.0), LaplacianParams())
        mock_logger.debug.assert_called()


class TestBlockDistortion:
    """Test the 63-coefficient block total"""

    def test_flat_matrix(self, service):
        """A flat matrix sums 63 identical coefficient distortions"""
        src = LaplacianParams(0.0, 100.0)
        single = service.distortion(QuantSpec.inter(4, 2.0), src)
        total = service.block_distortion(
            WeightingMatrix.inter_default(), 4, 2.0, 100.0, mode=QuantMode.INTER
        )
        assert total == pytest.approx(63 * single)

    def test_per_position_variances(self, service):
        """Zero-weighted positions are ignored by passing tiny variances"""
        variances = np.full((8, 8), 1e-12)
        variances[0, 1] = 2500.0
        total = service.block_distortion(WeightingMatrix.intra_default(), 4, 1.0, variances)
        expected = service.distortion(QuantSpec.intra(4, 1.0, weight=16), LaplacianParams(0.0, 2500.0))
        assert total == pytest.approx(expected, rel=1e-6)


class TestPredictErrorVariances:
    """Test first-pass error variance prediction"""

    def test_components(self, service):
        ar = ARParams()
        result = service.predict_error_variances(8, 1.25, 2.0, ar)

        d_x = service.distortion(QuantSpec.intra(8, 1.25), LaplacianParams(0.0, ar.var_n))
        d_u = service.distortion(
            QuantSpec.inter(8, 2.0), LaplacianParams(0.0, ar.residue_variance())
        )
        p1 = p_pmb_first(8)

        assert result["var_e_i1"] == pytest.approx(d_x)
        assert result["p1"] == pytest.approx(p1)
        assert result["sigma_u2"] == pytest.approx(ar.residue_variance())
        assert result["var_e_p1"] == pytest.approx(p1 * d_u + (1 - p1) * d_x)

    def test_invalid_q(self, service):
        with pytest.raises(ValidationError):
            service.predict_error_variances(40, 1.0, 2.0)
