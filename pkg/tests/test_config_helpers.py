"""
Tests for configuration helper functions
"""

from unittest.mock import patch

import pytest

from vpflab.core.errors import ConfigurationError
from vpflab.models.sweep_config import SweepConfig
from vpflab.utils.config_helpers import (
    THREADS_ENV,
    create_corr_curves_config,
    create_corr_map_config,
    create_variance_curves_config,
    create_vpf_map_config,
    resolve_worker_count,
)


class TestPresetConfigs:
    """Test preset sweep configurations"""

    def test_variance_curves_config(self):
        """Test the curve preset covers every q1"""
        config = create_variance_curves_config()

        assert isinstance(config, SweepConfig)
        assert config.q1_range == list(range(2, 32))
        assert config.alpha_i_set == [1.0, 1.25, 2.0]

    def test_corr_curves_config_with_seed(self):
        """Test seed and extra fields pass through"""
        config = create_corr_curves_config(seed=9, count=4096)

        assert config.base_seed == 9
        assert config.count == 4096

    def test_curve_presets_share_grid(self):
        """Both curve presets build the same sweep for the same arguments"""
        corr = create_corr_curves_config((1.0, 2.0), seed=4, count=1024)
        variance = create_variance_curves_config((1.0, 2.0), seed=4, count=1024)

        assert corr.to_dict() == variance.to_dict()

    def test_corr_map_config(self):
        """Test the correlation map preset uses the panels with a visible sign flip"""
        config = create_corr_map_config()

        assert config.alpha_i_set == [1.0, 1.25]
        assert config.q2_range == list(range(2, 32))

    def test_vpf_map_config(self):
        """Test the VPF map preset"""
        config = create_vpf_map_config(alpha_i_set=(2.0,))

        assert config.alpha_i_set == [2.0]
        assert config.alpha_p == 2.0
        assert len(config.q1_range) * len(config.q2_range) == 900


class TestResolveWorkerCount:
    """Test worker count resolution"""

    def test_explicit_request_wins(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV, "8")
        assert resolve_worker_count(3) == 3

    def test_environment(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV, "4")
        assert resolve_worker_count() == 4

    @pytest.mark.parametrize("raw", ["four", "0", "-2"])
    def test_invalid_environment(self, monkeypatch, raw):
        monkeypatch.setenv(THREADS_ENV, raw)
        with pytest.raises(ConfigurationError):
            resolve_worker_count()

    def test_cpu_count_fallback(self, monkeypatch):
        monkeypatch.delenv(THREADS_ENV, raising=False)
        with patch("vpflab.utils.config_helpers.os.cpu_count", return_value=6):
            assert resolve_worker_count() == 6

    def test_unknown_cpu_count(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV, " ")
        with patch("vpflab.utils.config_helpers.os.cpu_count", return_value=None):
            assert resolve_worker_count() == 1
