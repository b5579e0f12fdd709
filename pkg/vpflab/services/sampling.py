"""
Seeded random streams and source samplers

Every stream is a Philox counter-based generator keyed by a seed derived from a SHA-256 digest, so
cells of a sweep draw from independent streams that depend only on their coordinates.
"""

import hashlib
from typing import Any

import numpy as np

from vpflab.core.errors import ValidationError
from vpflab.models.laplacian_params import LaplacianParams
from vpflab.utils.validation import validate_positive

SEED_BITS = 64
_UNIFORM_BITS = 53


def derive_seed(base_seed: int, *parts: Any) -> int:
    """
    Derive a child seed from a base seed and any labels or coordinates

    Args:
        base_seed: Nonnegative base seed
        *parts: Labels and coordinates, rendered with str()

    Returns:
        64-bit seed
    """
    if base_seed < 0:
        raise ValidationError("base_seed must be nonnegative", field="base_seed", value=base_seed)
    payload = "::".join([str(base_seed), *[str(p) for p in parts]]).encode("utf-8")
    digest = hashlib.sha256(payload).digest()
    return int.from_bytes(digest[: SEED_BITS // 8], "little")


def make_rng(seed: int) -> np.random.Generator:
    """Create a Philox generator keyed by seed"""
    if seed < 0:
        raise ValidationError("seed must be nonnegative", field="seed", value=seed)
    return np.random.Generator(np.random.Philox(key=seed))


def _check_count(count: int) -> None:
    if count < 1:
        raise ValidationError("count must be at least 1", field="count", value=count)


def open_uniforms(count: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform draws on the open interval (0, 1) built from 53-bit integers"""
    _check_count(count)
    scale = float(2**_UNIFORM_BITS)
    return (rng.integers(0, 2**_UNIFORM_BITS, size=count).astype(float) + 0.5) / scale


def laplacian_sample(params: LaplacianParams, count: int, rng: np.random.Generator) -> np.ndarray:
    """
    Laplacian samples by inverse-CDF transform

    Args:
        params: Mean and variance
        count: Number of samples
        rng: Random stream, advanced by the call

    Returns:
        Array of count samples
    """
    u = open_uniforms(count, rng) - 0.5
    return params.mu - params.scale * np.sign(u) * np.log1p(-2.0 * np.abs(u))


def gaussian_sample(
    mu: float, sigma2: float, count: int, rng: np.random.Generator
) -> np.ndarray:
    """Gaussian samples mu + sqrt(sigma2) * z from shared standard normals"""
    sigma2 = validate_positive(sigma2, "sigma2")
    _check_count(count)
    return mu + np.sqrt(sigma2) * rng.standard_normal(count)


def mode_uniforms(count: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform draws on [0, 1) for Bernoulli mode decisions (P-MB when below p)"""
    _check_count(count)
    return rng.random(count)
