"""
Configuration of a parameter sweep
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from vpflab.core.errors import ValidationError
from vpflab.models.ar_params import ARParams
from vpflab.models.pipeline_options import PipelineOptions
from vpflab.utils.validation import (
    Q_MAX,
    Q_MIN,
    validate_alpha,
    validate_alpha_set,
    validate_q_range,
)

DEFAULT_COUNT = 2**17
DEFAULT_ALPHA_I_SET = (1.0, 1.25, 2.0)


def _full_q_range() -> List[int]:
    return list(range(Q_MIN, Q_MAX + 1))


@dataclass
class SweepConfig:
    """Q1/Q2/alpha grids, sample count, base seed and process constants of a sweep"""

    q1_range: List[int] = field(default_factory=_full_q_range)
    q2_range: List[int] = field(default_factory=_full_q_range)
    alpha_i_set: List[float] = field(default_factory=lambda: list(DEFAULT_ALPHA_I_SET))
    alpha_p: float = 2.0
    count: int = DEFAULT_COUNT
    base_seed: int = 0
    ar: ARParams = field(default_factory=ARParams)
    options: PipelineOptions = field(default_factory=PipelineOptions)
    workers: Optional[int] = None

    def __post_init__(self) -> None:
        """Validate the sweep configuration"""
        self.q1_range = validate_q_range(self.q1_range, "q1")
        self.q2_range = validate_q_range(self.q2_range, "q2")
        self.alpha_i_set = validate_alpha_set(self.alpha_i_set, "alpha_i")
        self.alpha_p = validate_alpha(self.alpha_p, "alpha_p")

        if self.count < 2:
            raise ValidationError("count must be at least 2", field="count", value=self.count)

        if self.base_seed < 0:
            raise ValidationError(
                "base_seed must be nonnegative", field="base_seed", value=self.base_seed
            )

        if self.workers is not None and self.workers <= 0:
            raise ValidationError("workers must be positive", field="workers", value=self.workers)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SweepConfig":
        """Create config from dictionary"""
        data = dict(data)

        ar = data.pop("ar", None)
        if isinstance(ar, dict):
            ar = ARParams(**ar)

        options = data.pop("options", None)
        if isinstance(options, dict):
            options = PipelineOptions(**options)

        return cls(
            ar=ar or ARParams(),
            options=options or PipelineOptions(),
            **data,
        )

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert to dictionary

        The worker count is left out: it never changes results.
        """
        return {
            "q1_range": list(self.q1_range),
            "q2_range": list(self.q2_range),
            "alpha_i_set": list(self.alpha_i_set),
            "alpha_p": self.alpha_p,
            "count": self.count,
            "base_seed": self.base_seed,
            "ar": self.ar.to_dict(),
            "options": self.options.to_dict(),
        }
