"""
Unit tests for data models
"""

import math

import numpy as np
import pytest

from vpflab.core.errors import PipelineError, ValidationError
from vpflab.models import (
    ARParams,
    ErrorBundle,
    LaplacianParams,
    MBProbModel,
    ModeDraws,
    PipelineOptions,
    PredictionSource,
    ProgressInfo,
    QuantMode,
    QuantSpec,
    SelfTestReport,
    SignalBundle,
    SkipReconstruction,
    Statistic,
    StatMap,
    SweepConfig,
    SweepStage,
    TruncationPolicy,
    VpfDifference,
    WeightingMatrix,
    select_map,
)


def make_bundle(length=4, complete=False):
    zeros = np.zeros(length)
    flags = np.zeros(length, dtype=bool)
    bundle = ErrorBundle(
        e_i1_n=zeros,
        e_p1_n=zeros,
        e_p1_nm1=zeros,
        x_nm2_rec=zeros,
        x_nm1_rec=zeros,
        x_n_rec=zeros,
        modes=ModeDraws(recon_nm1=flags, e_p1_n=flags, e_p1_nm1=flags),
    )
    if complete:
        bundle = bundle.with_second_pass(zeros, zeros, flags)
    return bundle


class TestQuantSpec:
    def test_delta_and_deadzone(self):
        spec = QuantSpec.intra(q=4, alpha=1.25)
        assert spec.delta == 8.0
        assert spec.deadzone == 10.0
        assert spec.mode == QuantMode.INTRA

    def test_inter_constructor(self):
        spec = QuantSpec.inter(q=31, alpha=2.0)
        assert spec.mode == QuantMode.INTER
        assert spec.delta == 62.0

    def test_mode_from_string(self):
        spec = QuantSpec(q=2, alpha=1.0, mode="inter")
        assert spec.mode == QuantMode.INTER

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"q": 1, "alpha": 1.0},
            {"q": 32, "alpha": 1.0},
            {"q": 4, "alpha": 0.9},
            {"q": 4, "alpha": 2.1},
            {"q": 4, "alpha": 1.0, "weight": 0},
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ValidationError):
            QuantSpec(**kwargs)

    def test_invalid_mode(self):
        with pytest.raises(ValueError):
            QuantMode.from_string("bidirectional")


class TestWeightingMatrix:
    def test_defaults(self):
        intra = WeightingMatrix.intra_default()
        inter = WeightingMatrix.inter_default()
        assert intra.entry(0, 0) == 8
        assert intra.entry(1, 0) == 16
        assert intra.entry(7, 7) == 83
        assert np.all(inter.to_array() == 16)

    def test_ac_positions(self):
        positions = list(WeightingMatrix.intra_default().ac_positions())
        assert len(positions) == 63
        assert (0, 0) not in positions

    def test_rejects_bad_shape(self):
        with pytest.raises(ValidationError):
            WeightingMatrix.from_rows([[16] * 8] * 7)

    def test_rejects_non_positive_entry(self):
        rows = [[16] * 8 for _ in range(8)]
        rows[3][4] = 0
        with pytest.raises(ValidationError):
            WeightingMatrix.from_rows(rows)


class TestLaplacianParams:
    def test_scale(self):
        params = LaplacianParams(mu=0.0, sigma2=2500.0)
        assert math.isclose(params.scale, math.sqrt(1250.0))

    @pytest.mark.parametrize("kwargs", [{"sigma2": 0.0}, {"sigma2": -1.0}, {"mu": float("nan")}])
    def test_invalid(self, kwargs):
        with pytest.raises(ValidationError):
            LaplacianParams(**kwargs)


class TestTruncationPolicy:
    def test_defaults(self):
        policy = TruncationPolicy()
        assert policy.tail_tol == 1e-10
        assert policy.max_terms == 1_000_000

    @pytest.mark.parametrize("kwargs", [{"tail_tol": 0.0}, {"tail_tol": 1.0}, {"max_terms": 0}])
    def test_invalid(self, kwargs):
        with pytest.raises(ValidationError):
            TruncationPolicy(**kwargs)


class TestARParams:
    """Test AR(1) process constants"""

    def test_derived_variances(self):
        ar = ARParams()
        assert math.isclose(ar.var_nm1, 0.99**2 * 2500 + 10)
        assert math.isclose(ar.var_n, 0.99**2 * ar.var_nm1 + 10)

    def test_lag_correlation(self):
        """Default constants give a lag correlation near 0.99797"""
        assert ARParams().lag_correlation() == pytest.approx(0.99797, abs=1e-5)

    def test_residue_variance_positive(self):
        assert ARParams().residue_variance() > 0

    def test_source(self):
        assert ARParams(sigma_x2=100.0).source == LaplacianParams(0.0, 100.0)

    @pytest.mark.parametrize(
        "kwargs",
        [{"rho": 1.0}, {"rho": 0.0}, {"rho_p": 1.5}, {"sigma_x2": 0}, {"sigma_nu2": -1}],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ValidationError):
            ARParams(**kwargs)

    def test_to_dict(self):
        data = ARParams().to_dict()
        assert data == {
            "sigma_x2": 2500.0,
            "rho": 0.99,
            "sigma_r2": 10.0,
            "rho_p": 0.88,
            "sigma_nu2": 1.0,
        }


class TestMBProbModel:
    def test_first_law_at_zero(self):
        """The law starts at floor + span"""
        assert MBProbModel().first_law(0) == pytest.approx(0.85)

    def test_second_law_fixed_point(self):
        """p1 equal to the floor stays there"""
        model = MBProbModel()
        assert model.second_law(model.floor, 10) == pytest.approx(model.floor)

    def test_q_max_locked(self):
        with pytest.raises(ValidationError):
            MBProbModel(q_max=51)


class TestPipelineOptions:
    def test_defaults(self):
        options = PipelineOptions()
        assert options.coupled_modes is False
        assert options.second_pass_pred_source == PredictionSource.FIRST_RECON
        assert options.skip_reconstruction == SkipReconstruction.COPY_REFERENCE

    def test_source_from_string(self):
        options = PipelineOptions(second_pass_pred_source="second_recon")
        assert options.second_pass_pred_source == PredictionSource.SECOND_RECON
        assert options.to_dict()["second_pass_pred_source"] == "second_recon"

    def test_skip_reconstruction_from_string(self):
        options = PipelineOptions(skip_reconstruction="intra_requant")
        assert options.skip_reconstruction == SkipReconstruction.INTRA_REQUANT
        assert options.to_dict()["skip_reconstruction"] == "intra_requant"

    def test_invalid_skip_reconstruction(self):
        with pytest.raises(ValueError):
            PipelineOptions(skip_reconstruction="interpolate")

    def test_invalid_source(self):
        with pytest.raises(ValueError):
            PipelineOptions(second_pass_pred_source="third_recon")

    def test_invalid_weight(self):
        with pytest.raises(ValidationError):
            PipelineOptions(inter_weight=0)


class TestSignalBundle:
    def test_length(self):
        x = np.arange(5.0)
        bundle = SignalBundle(x, x, x, x, x)
        assert bundle.length == 5

    def test_mismatched_lengths(self):
        x = np.arange(5.0)
        with pytest.raises(ValidationError):
            SignalBundle(x, x, x[:4], x, x)

    def test_empty(self):
        x = np.array([])
        with pytest.raises(ValidationError):
            SignalBundle(x, x, x, x, x)


class TestErrorBundle:
    """Test error bundle completeness tracking"""

    def test_incomplete_bundle(self):
        bundle = make_bundle()
        assert not bundle.is_complete()
        with pytest.raises(PipelineError):
            bundle.require_complete()

    def test_with_second_pass(self):
        bundle = make_bundle(complete=True)
        assert bundle.is_complete()
        assert bundle.modes.e_p2_nm1 is not None
        bundle.require_complete()

    def test_mismatched_lengths(self):
        with pytest.raises(ValidationError):
            make_bundle().with_second_pass(np.zeros(3), np.zeros(3), np.zeros(3, dtype=bool))

    def test_p_mb_fraction(self):
        flags = np.array([True, False, True, True])
        draws = ModeDraws(recon_nm1=flags, e_p1_n=flags, e_p1_nm1=~flags)
        assert draws.p_mb_fraction("recon_nm1") == 0.75
        assert draws.p_mb_fraction("e_p1_nm1") == 0.25
        with pytest.raises(ValidationError):
            draws.p_mb_fraction("e_p2_nm1")

    def test_shared_uniforms_length(self):
        flags = np.zeros(4, dtype=bool)
        with pytest.raises(ValidationError):
            ModeDraws(flags, flags, flags, shared_uniforms=np.zeros(3))


class TestVpfDifference:
    def test_agrees(self):
        assert VpfDifference(direct=10.0, decomposed=10.0 + 1e-9, scale=100.0).agrees()

    def test_disagrees(self):
        assert not VpfDifference(direct=10.0, decomposed=10.1, scale=100.0).agrees()

    def test_zero_difference_uses_scale(self):
        assert VpfDifference(direct=0.0, decomposed=1e-8, scale=1000.0).agrees()


class TestStatMap:
    """Test statistic grids"""

    def make_map(self):
        return StatMap(
            statistic=Statistic.VPF_DIFFERENCE,
            q1_ticks=[2, 3],
            q2_ticks=[4, 5, 6],
            values=np.array([[1.0, 2.0, 3.0], [4.0, 5.0, 6.0]]),
            cell_seeds=np.arange(6, dtype=np.uint64).reshape(2, 3),
        )

    def test_value_at(self):
        stat_map = self.make_map()
        assert stat_map.value_at(3, 5) == 5.0
        assert not stat_map.is_curve

    def test_value_at_requires_q2(self):
        with pytest.raises(ValidationError):
            self.make_map().value_at(3)

    def test_cells_row_major(self):
        cells = list(self.make_map().cells())
        assert cells[0] == (2, 4, 1.0, 0)
        assert cells[-1] == (3, 6, 6.0, 5)

    def test_curve(self):
        curve = StatMap(Statistic.VAR_E_I1, q1_ticks=[2, 3, 4], values=np.array([1.0, 2.0, 3.0]))
        assert curve.is_curve
        assert curve.value_at(4) == 3.0
        assert list(curve.cells())[1] == (3, None, 2.0, None)

    def test_region_mean(self):
        stat_map = self.make_map()
        assert stat_map.region_mean(lambda q1, q2: q2 == 6) == 4.5
        with pytest.raises(ValidationError):
            stat_map.region_mean(lambda q1, q2: False)

    def test_shape_mismatch(self):
        with pytest.raises(ValidationError):
            StatMap(Statistic.VAR_GAP, q1_ticks=[2, 3], values=np.zeros(3))

    def test_correlation_range(self):
        with pytest.raises(ValidationError):
            StatMap(Statistic.CORR_I1_P2, q1_ticks=[2], q2_ticks=[2], values=np.array([[1.5]]))

    def test_sign_values(self):
        with pytest.raises(ValidationError):
            StatMap(Statistic.SIGN_INTRA, q1_ticks=[2], q2_ticks=[2], values=np.array([[0.5]]))

    def test_select_map(self):
        first = StatMap(Statistic.VAR_E_I1, [2], np.array([1.0]), alpha_i=1.0)
        second = StatMap(Statistic.VAR_E_I1, [2], np.array([2.0]), alpha_i=2.0)
        assert select_map([first, second], Statistic.VAR_E_I1, 2.0) is second
        with pytest.raises(ValidationError):
            select_map([first, second], Statistic.VAR_E_P1, 1.0)


class TestSweepConfig:
    def test_defaults(self):
        config = SweepConfig()
        assert config.q1_range == list(range(2, 32))
        assert config.alpha_i_set == [1.0, 1.25, 2.0]
        assert config.count == 2**17

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"q1_range": []},
            {"q2_range": [1, 2]},
            {"alpha_i_set": [0.5]},
            {"alpha_p": 3.0},
            {"count": 1},
            {"base_seed": -1},
            {"workers": 0},
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ValidationError):
            SweepConfig(**kwargs)

    def test_dict_roundtrip(self):
        config = SweepConfig(
            q1_range=[2, 3],
            q2_range=[4],
            count=100,
            base_seed=7,
            options=PipelineOptions(coupled_modes=True),
            workers=3,
        )
        data = config.to_dict()
        assert "workers" not in data

        restored = SweepConfig.from_dict(data)
        assert restored.to_dict() == data
        assert restored.options.coupled_modes is True


class TestProgressInfo:
    def test_update_percentage(self):
        info = ProgressInfo(stage=SweepStage.RUNNING, message="", current=5, total=20)
        info.update_percentage()
        assert info.percentage == 25.0
        assert not info.is_complete()

    def test_zero_total(self):
        info = ProgressInfo(stage=SweepStage.ERROR, message="", error="boom")
        info.update_percentage()
        assert info.percentage == 0.0
        assert info.has_error()


class TestSelfTestReport:
    def test_add_check(self):
        report = SelfTestReport()
        report.add_check("ok", True)
        assert report.is_valid
        report.add_check("bad", False, "detail")
        assert not report.is_valid
        assert report.checks_run == 2
        assert report.errors == ["bad: detail"]

    def test_warnings_do_not_fail(self):
        report = SelfTestReport()
        report.add_warning("close call")
        assert report.is_valid
        assert report.get_error_count() == 0
