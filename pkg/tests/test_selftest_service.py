"""
Tests for the self-test oracle suite
"""

from unittest.mock import Mock

import pytest

from vpflab.models.quant_mode import QuantMode
from vpflab.models.selftest_report import SelfTestReport
from vpflab.services.distortion_service import DistortionService
from vpflab.services.selftest_service import (
    HAND_SIGNS,
    ORACLE_ALPHA,
    ORACLE_Q,
    SelfTestService,
    literal_dequantize,
    literal_quantize,
)
from vpflab.utils.logger import Logger


@pytest.fixture
def mock_logger():
    """Create mock logger"""
    return Mock(spec=Logger)


class TestLiteralTranscription:
    def test_quantize(self):
        assert literal_quantize(-7.0, 8.0, 1.25) == -1
        assert literal_quantize(3.0, 4.0, 2.0) == 0
        assert literal_quantize(0.0, 4.0, 1.0) == 0

    def test_dequantize(self):
        assert literal_dequantize(1, 4.0, QuantMode.INTER) == 6.0
        assert literal_dequantize(-2, 4.0, QuantMode.INTRA) == -8.0


class TestSelfTestService:
    """Test the oracle suite"""

    def test_quantizer_checks_pass(self, mock_logger):
        report = SelfTestReport()
        SelfTestService(logger=mock_logger).check_quantizer(report)

        assert report.is_valid, report.errors
        assert report.checks_run == len(ORACLE_Q) * len(ORACLE_ALPHA) * 2 * 3

    def test_sign_checks_pass(self, mock_logger):
        report = SelfTestReport()
        SelfTestService(logger=mock_logger).check_sign_maps(report)

        assert report.is_valid, report.errors
        assert report.checks_run == len(HAND_SIGNS)

    @pytest.mark.slow
    def test_full_run(self, mock_logger):
        """Default seed and sample count stay inside the 3 SE band everywhere"""
        service = SelfTestService(logger=mock_logger)
        report = service.run()

        assert report.is_valid, report.errors
        mock_logger.info.assert_called()

    def test_distortion_failure(self, mock_logger):
        """An analytic value far outside the Monte Carlo band fails the suite"""
        distortion = Mock(spec=DistortionService)
        distortion.distortion.return_value = 10.0
        distortion.monte_carlo_distortion.return_value = (1.0, 0.1)

        report = SelfTestReport()
        SelfTestService(distortion=distortion, logger=mock_logger).check_distortion(report)

        assert not report.is_valid
        assert report.get_error_count() == report.checks_run

    def test_distortion_warning_band(self, mock_logger):
        """Excursions between 2.5 and 3 standard errors only warn"""
        distortion = Mock(spec=DistortionService)
        distortion.distortion.return_value = 1.28
        distortion.monte_carlo_distortion.return_value = (1.0, 0.1)

        report = SelfTestReport()
        SelfTestService(distortion=distortion, logger=mock_logger).check_distortion(report)

        assert report.is_valid
        assert len(report.warnings) == report.checks_run

    def test_three_se_fails(self, mock_logger):
        """Just past 3 standard errors is a failure, not a warning"""
        distortion = Mock(spec=DistortionService)
        distortion.distortion.return_value = 1.32
        distortion.monte_carlo_distortion.return_value = (1.0, 0.1)

        report = SelfTestReport()
        SelfTestService(distortion=distortion, logger=mock_logger).check_distortion(report)

        assert not report.is_valid
        assert report.warnings == []
