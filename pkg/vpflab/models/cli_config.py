"""
Command-line configuration model
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, ValidationInfo, field_validator, model_validator

from vpflab.models.ar_params import ARParams
from vpflab.models.pipeline_options import (
    PipelineOptions,
    PredictionSource,
    SkipReconstruction,
)
from vpflab.models.stat_map import CorrPair, SignKind
from vpflab.models.sweep_config import DEFAULT_ALPHA_I_SET, DEFAULT_COUNT, SweepConfig
from vpflab.utils.validation import (
    Q_MAX,
    Q_MIN,
    parse_int_range,
    parse_real,
    parse_real_list,
)


class Subcommand(str, Enum):
    """CLI subcommands"""

    CURVES = "curves"
    CORR = "corr"
    CORRMAP = "corrmap"
    VPFMAP = "vpfmap"
    SIGNMAP = "signmap"
    ANALYTIC = "analytic"
    SELFTEST = "selftest"


class OutputFormat(str, Enum):
    """Result file formats"""

    CSV = "csv"
    JSON = "json"


class CliConfig(BaseModel):
    """
    Validated command-line configuration

    Flag values and config-file values arrive as strings and are coerced here. Construction fails
    with ``ValidationError`` when the resulting sweep would be malformed, so no work starts on a
    bad configuration.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    subcommand: Subcommand
    q1: List[int] = list(range(Q_MIN, Q_MAX + 1))
    q2: List[int] = list(range(Q_MIN, Q_MAX + 1))
    alpha_i: List[float] = list(DEFAULT_ALPHA_I_SET)
    alpha_p: float = 2.0
    count: int = DEFAULT_COUNT
    seed: int = 0
    kind: SignKind = SignKind.INTRA_CENTROID
    which: CorrPair = CorrPair.I1_VS_P2
    output: str = "-"
    format: OutputFormat = OutputFormat.CSV
    threads: Optional[int] = None
    coupled_modes: bool = False
    second_pass_pred_source: PredictionSource = PredictionSource.FIRST_RECON
    skip_reconstruction: SkipReconstruction = SkipReconstruction.COPY_REFERENCE
    sigma_x2: float = 2500.0
    rho: float = 0.99
    sigma_r2: float = 10.0
    rho_p: float = 0.88
    sigma_nu2: float = 1.0
    log_level: str = "WARNING"

    @field_validator("q1", "q2", mode="before")
    @classmethod
    def _parse_q_range(cls, value: Any, info: ValidationInfo) -> Any:
        if isinstance(value, str):
            return parse_int_range(value, info.field_name or "q")
        return value

    @field_validator("alpha_i", mode="before")
    @classmethod
    def _parse_alpha_set(cls, value: Any) -> Any:
        if isinstance(value, str):
            return parse_real_list(value, "alpha_i")
        return value

    @field_validator("alpha_p", mode="before")
    @classmethod
    def _parse_alpha_p(cls, value: Any) -> Any:
        if isinstance(value, str):
            return parse_real(value, "alpha_p")
        return value

    @field_validator("kind", mode="before")
    @classmethod
    def _parse_kind(cls, value: Any) -> Any:
        if isinstance(value, str) and value in ("intra", "inter"):
            return f"{value}_centroid"
        return value

    @field_validator("coupled_modes", mode="before")
    @classmethod
    def _parse_flag(cls, value: Any) -> Any:
        if isinstance(value, str):
            return value.strip().lower() in ("1", "true", "yes", "on")
        return value

    @field_validator("log_level")
    @classmethod
    def _upper_level(cls, value: str) -> str:
        level = value.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR"):
            raise ValueError(f"Unknown log level: {value}")
        return level

    @model_validator(mode="after")
    def _check_sweep(self) -> "CliConfig":
        self.to_sweep_config()
        return self

    def to_sweep_config(self) -> SweepConfig:
        """Build the sweep configuration described by the flags"""
        return SweepConfig(
            q1_range=list(self.q1),
            q2_range=list(self.q2),
            alpha_i_set=list(self.alpha_i),
            alpha_p=self.alpha_p,
            count=self.count,
            base_seed=self.seed,
            ar=ARParams(
                sigma_x2=self.sigma_x2,
                rho=self.rho,
                sigma_r2=self.sigma_r2,
                rho_p=self.rho_p,
                sigma_nu2=self.sigma_nu2,
            ),
            options=PipelineOptions(
                coupled_modes=self.coupled_modes,
                second_pass_pred_source=self.second_pass_pred_source,
                skip_reconstruction=self.skip_reconstruction,
            ),
            workers=self.threads,
        )

    def metadata(self) -> Dict[str, Any]:
        """Effective configuration recorded in result files"""
        data: Dict[str, Any] = {"subcommand": self.subcommand.value}
        if self.subcommand == Subcommand.SIGNMAP:
            data["kind"] = self.kind.value
        if self.subcommand == Subcommand.CORRMAP:
            data["which"] = self.which.value
        data.update(self.to_sweep_config().to_dict())
        return data
