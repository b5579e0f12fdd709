"""
Switches of the synthetic compression pipeline
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict

from vpflab.models.quant_spec import DEFAULT_WEIGHT
from vpflab.utils.validation import validate_positive


class PredictionSource(str, Enum):
    """Reference used for the second-pass prediction of x_{n-1}"""

    FIRST_RECON = "first_recon"
    SECOND_RECON = "second_recon"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_string(cls, value: str) -> "PredictionSource":
        """Create PredictionSource from string value"""
        for source in cls:
            if source.value == value:
                return source
        raise ValueError(f"Invalid prediction source: {value}")


class SkipReconstruction(str, Enum):
    """How the first pass rebuilds x_{n-1} when its macroblock is skipped"""

    COPY_REFERENCE = "copy_reference"
    INTRA_REQUANT = "intra_requant"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_string(cls, value: str) -> "SkipReconstruction":
        """Create SkipReconstruction from string value"""
        for mode in cls:
            if mode.value == value:
                return mode
        raise ValueError(f"Invalid skip reconstruction: {value}")


@dataclass(frozen=True)
class PipelineOptions:
    """Sensitivity switches and coefficient weights for the pipeline"""

    coupled_modes: bool = False
    second_pass_pred_source: PredictionSource = PredictionSource.FIRST_RECON
    skip_reconstruction: SkipReconstruction = SkipReconstruction.COPY_REFERENCE
    intra_weight: float = DEFAULT_WEIGHT
    inter_weight: float = DEFAULT_WEIGHT

    def __post_init__(self) -> None:
        """Validate weights and normalize the enum-valued switches"""
        validate_positive(self.intra_weight, "intra_weight")
        validate_positive(self.inter_weight, "inter_weight")
        if isinstance(self.second_pass_pred_source, str):
            object.__setattr__(
                self,
                "second_pass_pred_source",
                PredictionSource.from_string(self.second_pass_pred_source),
            )
        if isinstance(self.skip_reconstruction, str):
            object.__setattr__(
                self,
                "skip_reconstruction",
                SkipReconstruction.from_string(self.skip_reconstruction),
            )

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "coupled_modes": self.coupled_modes,
            "second_pass_pred_source": str(self.second_pass_pred_source),
            "skip_reconstruction": str(self.skip_reconstruction),
            "intra_weight": self.intra_weight,
            "inter_weight": self.inter_weight,
        }
