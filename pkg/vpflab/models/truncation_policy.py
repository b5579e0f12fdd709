"""
Stop rule for the infinite distortion series
"""

from dataclasses import dataclass

from vpflab.core.errors import ValidationError


@dataclass(frozen=True)
class TruncationPolicy:
    """Tail-mass tolerance and term budget for series truncation"""

    tail_tol: float = 1e-10
    max_terms: int = 1_000_000

    def __post_init__(self) -> None:
        """Validate the policy"""
        if not 0.0 < self.tail_tol < 1.0:
            raise ValidationError(
                "tail_tol must lie in (0, 1)", field="tail_tol", value=self.tail_tol
            )
        if self.max_terms < 1:
            raise ValidationError(
                "max_terms must be at least 1", field="max_terms", value=self.max_terms
            )
