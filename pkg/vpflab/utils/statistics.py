"""
Sample moments of error sequences
"""

from typing import Tuple

import numpy as np

from vpflab.core.errors import DegenerateInputError

# Unbiased estimators throughout
DDOF = 1


def _pair(a: np.ndarray, b: np.ndarray, statistic: str) -> Tuple[np.ndarray, np.ndarray]:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise DegenerateInputError(
            f"Inputs must be one-dimensional with equal lengths, got {a.shape} and {b.shape}",
            statistic=statistic,
        )
    if a.size < 2:
        raise DegenerateInputError("At least two samples are required", statistic=statistic)
    return a, b


def sample_var(a: np.ndarray) -> float:
    """
    Sample variance

    Raises:
        DegenerateInputError: If fewer than two samples are given
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 1 or a.size < 2:
        raise DegenerateInputError("At least two samples are required", statistic="var")
    return float(np.var(a, ddof=DDOF))


def sample_cov(a: np.ndarray, b: np.ndarray) -> float:
    """
    Sample covariance

    Raises:
        DegenerateInputError: On mismatched lengths or fewer than two samples
    """
    a, b = _pair(a, b, "cov")
    return float(np.dot(a - a.mean(), b - b.mean()) / (a.size - DDOF))


def pearson_corr(a: np.ndarray, b: np.ndarray) -> float:
    """
    Sample Pearson correlation, clipped to [-1, 1]

    Raises:
        DegenerateInputError: If either input has zero variance
    """
    a, b = _pair(a, b, "corr")
    da = a - a.mean()
    db = b - b.mean()
    norm = float(np.sqrt(np.dot(da, da) * np.dot(db, db)))
    if norm == 0.0:
        raise DegenerateInputError("Correlation of a constant sequence", statistic="corr")
    return float(np.clip(np.dot(da, db) / norm, -1.0, 1.0))
