"""
Realizations of the AR(1) source at time indices n-2, n-1 and n
"""

from dataclasses import dataclass

import numpy as np

from vpflab.core.errors import ValidationError


@dataclass(eq=False)
class SignalBundle:
    """Source samples x_{n-2}, x_{n-1}, x_n and the innovations that link them"""

    x_nm2: np.ndarray
    x_nm1: np.ndarray
    x_n: np.ndarray
    r_nm1: np.ndarray
    r_n: np.ndarray

    def __post_init__(self) -> None:
        """Validate that all sequences share one length"""
        lengths = {
            name: np.shape(getattr(self, name))
            for name in ("x_nm2", "x_nm1", "x_n", "r_nm1", "r_n")
        }
        if len(set(lengths.values())) != 1:
            raise ValidationError("Signal sequences must share one length", details=lengths)
        if self.x_nm2.ndim != 1 or self.x_nm2.size < 1:
            raise ValidationError(
                "Signal sequences must be nonempty and one-dimensional",
                field="length",
                value=self.x_nm2.size,
            )

    @property
    def length(self) -> int:
        """Number of samples"""
        return int(self.x_nm2.size)

    def __repr__(self) -> str:
        return f"SignalBundle(length={self.length})"
