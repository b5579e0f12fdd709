"""
Preset sweep configurations and worker-count resolution
"""

import os
from typing import Any, Optional, Sequence

from vpflab.core.errors import ConfigurationError
from vpflab.models.sweep_config import SweepConfig
from vpflab.utils.validation import Q_MAX, Q_MIN

THREADS_ENV = "VPFLAB_THREADS"

_FULL_RANGE = list(range(Q_MIN, Q_MAX + 1))


def create_variance_curves_config(
    alpha_i_set: Sequence[float] = (1.0, 1.25, 2.0), seed: int = 0, **options: Any
) -> SweepConfig:
    """
    Configuration for Var(e_i1) and Var(e_p1) versus q1

    Args:
        alpha_i_set: Intra deadzone factors, one curve each
        seed: Base seed
        **options: Additional SweepConfig fields

    Returns:
        SweepConfig over q1 in 2..31
    """
    return SweepConfig(
        q1_range=list(_FULL_RANGE), alpha_i_set=list(alpha_i_set), base_seed=seed, **options
    )


def create_corr_curves_config(
    alpha_i_set: Sequence[float] = (1.0, 1.25, 2.0), seed: int = 0, **options: Any
) -> SweepConfig:
    """Configuration for the first-pass correlation curves versus q1; same grid as the variances"""
    return create_variance_curves_config(alpha_i_set, seed, **options)


def create_corr_map_config(
    alpha_i_set: Sequence[float] = (1.0, 1.25), seed: int = 0, **options: Any
) -> SweepConfig:
    """
    Configuration for the second-pass correlation maps

    The sign flip at q2 = (2/alpha_i)*q1 is visible inside the grid for alpha_i < 2, hence the
    default panels.
    """
    return SweepConfig(
        q1_range=list(_FULL_RANGE),
        q2_range=list(_FULL_RANGE),
        alpha_i_set=list(alpha_i_set),
        base_seed=seed,
        **options,
    )


def create_vpf_map_config(
    alpha_i_set: Sequence[float] = (1.0, 1.25, 2.0), seed: int = 0, **options: Any
) -> SweepConfig:
    """Configuration for the full 30x30 VPF difference maps"""
    return SweepConfig(
        q1_range=list(_FULL_RANGE),
        q2_range=list(_FULL_RANGE),
        alpha_i_set=list(alpha_i_set),
        alpha_p=2.0,
        base_seed=seed,
        **options,
    )


def resolve_worker_count(requested: Optional[int] = None) -> int:
    """
    Number of concurrent sweep cells

    Order: explicit request, then VPFLAB_THREADS, then the CPU count.

    Raises:
        ConfigurationError: If VPFLAB_THREADS is not a positive integer
    """
    if requested is not None:
        return requested

    raw = os.environ.get(THREADS_ENV)
    if raw is not None and raw.strip():
        try:
            value = int(raw)
        except ValueError:
            raise ConfigurationError(
                f"{THREADS_ENV} must be an integer: {raw!r}", config_key=THREADS_ENV
            )
        if value <= 0:
            raise ConfigurationError(f"{THREADS_ENV} must be positive", config_key=THREADS_ENV)
        return value

    return os.cpu_count() or 1
