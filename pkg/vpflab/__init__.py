"""
vpflab - Semi-analytic experiments on MPEG-2 double compression and the prediction footprint
"""

__version__ = "0.1.0"

from vpflab.builders.sweep_config_builder import SweepConfigBuilder
from vpflab.core.errors import (
    ConfigurationError,
    DegenerateInputError,
    OutputError,
    PipelineError,
    TruncationError,
    ValidationError,
    VpfLabError,
)
from vpflab.core.quantizer import deadzone_width, dequantize, quant_step, quantize, requantize
from vpflab.core.sign_map import sign_map
from vpflab.core.sweep_runner import SweepRunner, run_sweep
from vpflab.models.ar_params import ARParams
from vpflab.models.error_bundle import ErrorBundle, VpfDifference
from vpflab.models.laplacian_params import LaplacianParams
from vpflab.models.pipeline_options import PipelineOptions, PredictionSource, SkipReconstruction
from vpflab.models.quant_mode import QuantMode
from vpflab.models.quant_spec import QuantSpec
from vpflab.models.stat_map import CorrPair, SignKind, Statistic, StatMap
from vpflab.models.sweep_config import SweepConfig
from vpflab.models.truncation_policy import TruncationPolicy
from vpflab.models.weighting_matrix import WeightingMatrix
from vpflab.services.distortion_service import DistortionService
from vpflab.services.mode_probability import p_pmb_first, p_pmb_second
from vpflab.services.pipeline_service import SynthPipelineService, vpf_difference
from vpflab.utils.config_helpers import (
    create_corr_curves_config,
    create_corr_map_config,
    create_variance_curves_config,
    create_vpf_map_config,
)
from vpflab.utils.statistics import pearson_corr

__all__ = [
    "SweepRunner",
    "run_sweep",
    "SweepConfigBuilder",
    "SweepConfig",
    "ARParams",
    "PipelineOptions",
    "PredictionSource",
    "SkipReconstruction",
    "QuantMode",
    "QuantSpec",
    "LaplacianParams",
    "TruncationPolicy",
    "WeightingMatrix",
    "ErrorBundle",
    "VpfDifference",
    "StatMap",
    "Statistic",
    "CorrPair",
    "SignKind",
    "DistortionService",
    "SynthPipelineService",
    "quant_step",
    "deadzone_width",
    "quantize",
    "dequantize",
    "requantize",
    "sign_map",
    "p_pmb_first",
    "p_pmb_second",
    "pearson_corr",
    "vpf_difference",
    "create_variance_curves_config",
    "create_corr_curves_config",
    "create_corr_map_config",
    "create_vpf_map_config",
    "VpfLabError",
    "ValidationError",
    "ConfigurationError",
    "TruncationError",
    "DegenerateInputError",
    "PipelineError",
    "OutputError",
]
