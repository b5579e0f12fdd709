"""
Laplacian source model parameters
"""

import math
from dataclasses import dataclass

from vpflab.core.errors import ValidationError
from vpflab.utils.validation import validate_positive


@dataclass(frozen=True)
class LaplacianParams:
    """Laplacian distribution given by mean and variance"""

    mu: float = 0.0
    sigma2: float = 2500.0

    def __post_init__(self) -> None:
        """Validate the parameters"""
        if not math.isfinite(self.mu):
            raise ValidationError("mu must be finite", field="mu", value=self.mu)
        object.__setattr__(self, "sigma2", validate_positive(self.sigma2, "sigma2"))

    @property
    def scale(self) -> float:
        """Scale parameter b, with variance 2*b^2"""
        return math.sqrt(self.sigma2 / 2.0)
