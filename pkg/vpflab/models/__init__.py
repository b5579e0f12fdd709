"""
Data models for vpflab
"""

from vpflab.models.ar_params import ARParams
from vpflab.models.cli_config import CliConfig, OutputFormat, Subcommand
from vpflab.models.error_bundle import ErrorBundle, ModeDraws, VpfDifference
from vpflab.models.laplacian_params import LaplacianParams
from vpflab.models.mb_prob_model import MBProbModel
from vpflab.models.pipeline_options import PipelineOptions, PredictionSource, SkipReconstruction
from vpflab.models.progress_info import ProgressInfo, SweepStage
from vpflab.models.quant_mode import QuantMode
from vpflab.models.quant_spec import QuantSpec
from vpflab.models.selftest_report import SelfTestReport
from vpflab.models.signal_bundle import SignalBundle
from vpflab.models.stat_map import CorrPair, SignKind, Statistic, StatMap, select_map
from vpflab.models.sweep_config import SweepConfig
from vpflab.models.truncation_policy import TruncationPolicy
from vpflab.models.weighting_matrix import WeightingMatrix

__all__ = [
    "ARParams",
    "CliConfig",
    "CorrPair",
    "ErrorBundle",
    "LaplacianParams",
    "MBProbModel",
    "ModeDraws",
    "OutputFormat",
    "PipelineOptions",
    "PredictionSource",
    "ProgressInfo",
    "QuantMode",
    "QuantSpec",
    "SelfTestReport",
    "SignKind",
    "SignalBundle",
    "SkipReconstruction",
    "Statistic",
    "StatMap",
    "SweepConfig",
    "SweepStage",
    "TruncationPolicy",
    "VpfDifference",
    "WeightingMatrix",
    "select_map",
]
