"""
Macroblock-type probability model
"""

import math
from dataclasses import dataclass

from vpflab.core.errors import ValidationError
from vpflab.utils.validation import Q_MAX


@dataclass(frozen=True)
class MBProbModel:
    """Constants of the P-MB probability laws"""

    q_max: int = Q_MAX
    floor: float = 0.15
    span: float = 0.7
    decay: float = 9.0

    def __post_init__(self) -> None:
        """The laws are defined against the largest MPEG-2 parameter only"""
        if self.q_max != Q_MAX:
            raise ValidationError(
                f"q_max must equal {Q_MAX}", field="q_max", value=self.q_max
            )

    def first_law(self, q1: float) -> float:
        """P-MB probability of the first compression, without range checks"""
        return self.floor + self.span * math.exp(-self.decay * q1 / self.q_max)

    def second_law(self, p1: float, q2: float) -> float:
        """P-MB probability of the second compression given p1, without range checks"""
        return self.floor + (p1 - self.floor) * math.exp(-self.decay * q2 / self.q_max)
