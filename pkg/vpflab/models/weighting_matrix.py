"""
MPEG-2 quantization weighting matrices
"""

from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

import numpy as np

from vpflab.core.errors import ValidationError

BLOCK_SIZE = 8

# Default intra matrix of the FFmpeg MPEG-2 encoder
DEFAULT_INTRA_ENTRIES: Tuple[Tuple[float, ...], ...] = (
    (8, 16, 19, 22, 26, 27, 29, 34),
    (16, 16, 22, 24, 27, 29, 34, 37),
    (19, 22, 26, 27, 29, 34, 34, 38),
    (22, 22, 26, 27, 29, 34, 37, 40),
    (22, 26, 27, 29, 32, 35, 40, 48),
    (26, 27, 29, 32, 35, 40, 48, 58),
    (26, 27, 29, 34, 38, 46, 56, 69),
    (27, 29, 35, 38, 46, 56, 69, 83),
)

DEFAULT_INTER_ENTRIES: Tuple[Tuple[float, ...], ...] = tuple(
    tuple(16 for _ in range(BLOCK_SIZE)) for _ in range(BLOCK_SIZE)
)


@dataclass(frozen=True)
class WeightingMatrix:
    """8x8 grid of per-coefficient quantization weights"""

    entries: Tuple[Tuple[float, ...], ...]

    def __post_init__(self) -> None:
        """Validate shape and positivity"""
        if len(self.entries) != BLOCK_SIZE or any(len(row) != BLOCK_SIZE for row in self.entries):
            raise ValidationError("Weighting matrix must be 8x8", field="entries")

        for i, row in enumerate(self.entries):
            for j, value in enumerate(row):
                if not value > 0:
                    raise ValidationError(
                        f"Weighting matrix entry ({i},{j}) must be positive",
                        field="entries",
                        value=value,
                    )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]]) -> "WeightingMatrix":
        """Create a matrix from any nested sequence"""
        return cls(tuple(tuple(float(v) for v in row) for row in rows))

    @classmethod
    def intra_default(cls) -> "WeightingMatrix":
        """Default intra matrix"""
        return cls.from_rows(DEFAULT_INTRA_ENTRIES)

    @classmethod
    def inter_default(cls) -> "WeightingMatrix":
        """Default inter matrix, all entries 16"""
        return cls.from_rows(DEFAULT_INTER_ENTRIES)

    def entry(self, i: int, j: int) -> float:
        """Weight at row i, column j"""
        return self.entries[i][j]

    def to_array(self) -> np.ndarray:
        """Return the matrix as an 8x8 float array"""
        return np.array(self.entries, dtype=float)

    def ac_positions(self) -> Iterator[Tuple[int, int]]:
        """Iterate over the 63 AC positions (DC excluded)"""
        for i in range(BLOCK_SIZE):
            for j in range(BLOCK_SIZE):
                if (i, j) != (0, 0):
                    yield i, j
