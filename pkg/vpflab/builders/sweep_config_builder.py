"""
Builder pattern for creating sweep configurations
"""

from typing import List, Optional, Sequence, Union

from vpflab.models.ar_params import ARParams
from vpflab.models.pipeline_options import (
    PipelineOptions,
    PredictionSource,
    SkipReconstruction,
)
from vpflab.models.sweep_config import DEFAULT_ALPHA_I_SET, DEFAULT_COUNT, SweepConfig
from vpflab.utils.validation import Q_MAX, Q_MIN, parse_int_range


class SweepConfigBuilder:
    """Builder for creating SweepConfig objects"""

    def __init__(self) -> None:
        """Initialize the builder with the full default grid"""
        self._q1_range: List[int] = list(range(Q_MIN, Q_MAX + 1))
        self._q2_range: List[int] = list(range(Q_MIN, Q_MAX + 1))
        self._alpha_i_set: List[float] = list(DEFAULT_ALPHA_I_SET)
        self._alpha_p: float = 2.0
        self._count: int = DEFAULT_COUNT
        self._base_seed: int = 0
        self._ar: ARParams = ARParams()
        self._coupled_modes: bool = False
        self._pred_source: PredictionSource = PredictionSource.FIRST_RECON
        self._skip_reconstruction: SkipReconstruction = SkipReconstruction.COPY_REFERENCE
        self._workers: Optional[int] = None

    @classmethod
    def create(cls) -> "SweepConfigBuilder":
        """Create a new builder instance"""
        return cls()

    def with_q1_range(self, q1: Union[str, Sequence[int]]) -> "SweepConfigBuilder":
        """
        Set the first-compression quantization parameters

        Args:
            q1: Range expression such as ``"2..31"`` or a sequence of integers

        Returns:
            Builder instance for chaining
        """
        self._q1_range = parse_int_range(q1, "q1") if isinstance(q1, str) else list(q1)
        return self

    def with_q2_range(self, q2: Union[str, Sequence[int]]) -> "SweepConfigBuilder":
        """Set the second-compression quantization parameters"""
        self._q2_range = parse_int_range(q2, "q2") if isinstance(q2, str) else list(q2)
        return self

    def with_alpha_i(self, *alphas: float) -> "SweepConfigBuilder":
        """Set the intra deadzone factors, one panel each"""
        self._alpha_i_set = list(alphas)
        return self

    def with_alpha_p(self, alpha_p: float) -> "SweepConfigBuilder":
        """Set the inter deadzone factor"""
        self._alpha_p = alpha_p
        return self

    def with_count(self, count: int) -> "SweepConfigBuilder":
        """Set the samples per cell"""
        self._count = count
        return self

    def with_seed(self, seed: int) -> "SweepConfigBuilder":
        """Set the base seed"""
        self._base_seed = seed
        return self

    def with_ar_params(self, ar: ARParams) -> "SweepConfigBuilder":
        """Set the source and prediction constants"""
        self._ar = ar
        return self

    def with_coupled_modes(self, coupled: bool = True) -> "SweepConfigBuilder":
        """Reuse one set of mode draws at every recipe site"""
        self._coupled_modes = coupled
        return self

    def with_second_pass_pred_source(
        self, source: Union[str, PredictionSource]
    ) -> "SweepConfigBuilder":
        """
        Set the reference of the second-pass prediction

        Args:
            source: ``first_recon`` or ``second_recon``

        Returns:
            Builder instance for chaining
        """
        if isinstance(source, str):
            self._pred_source = PredictionSource.from_string(source)
        else:
            self._pred_source = source
        return self

    def with_skip_reconstruction(
        self, mode: Union[str, SkipReconstruction]
    ) -> "SweepConfigBuilder":
        """Choose how a skipped macroblock at n-1 is rebuilt in the first pass"""
        self._skip_reconstruction = SkipReconstruction.from_string(mode)
        return self

    def with_workers(self, workers: int) -> "SweepConfigBuilder":
        """Set the number of concurrent cells"""
        self._workers = workers
        return self

    def build(self) -> SweepConfig:
        """
        Build the SweepConfig object

        Raises:
            ValidationError: If any field is out of range
        """
        return SweepConfig(
            q1_range=self._q1_range,
            q2_range=self._q2_range,
            alpha_i_set=self._alpha_i_set,
            alpha_p=self._alpha_p,
            count=self._count,
            base_seed=self._base_seed,
            ar=self._ar,
            options=PipelineOptions(
                coupled_modes=self._coupled_modes,
                second_pass_pred_source=self._pred_source,
                skip_reconstruction=self._skip_reconstruction,
            ),
            workers=self._workers,
        )
