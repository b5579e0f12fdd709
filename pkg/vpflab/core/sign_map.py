"""
Closed-form sign maps of centroid requantization
"""

from typing import Sequence

import numpy as np

from vpflab.core.quantizer import requantize
from vpflab.models.pipeline_options import PipelineOptions
from vpflab.models.quant_spec import DEFAULT_WEIGHT, QuantSpec
from vpflab.models.stat_map import SignKind, Statistic, StatMap
from vpflab.utils.validation import validate_alpha, validate_q_range


def centroid_shift(
    kind: SignKind,
    q1: int,
    q2: int,
    alpha_i: float,
    alpha_p: float,
    intra_weight: float = DEFAULT_WEIGHT,
    inter_weight: float = DEFAULT_WEIGHT,
) -> float:
    """
    d' - d for the first reconstruction level of the first quantizer

    Intra: d is the intra centroid delta1 and d' its intra requantization at q2. Inter: d is
    delta1 + delta1/2 and d' its inter requantization at q2.
    """
    if kind == SignKind.INTRA_CENTROID:
        first = QuantSpec.intra(q1, alpha_i, weight=intra_weight)
        second = QuantSpec.intra(q2, alpha_i, weight=intra_weight)
        d = first.delta
    else:
        first = QuantSpec.inter(q1, alpha_p, weight=inter_weight)
        second = QuantSpec.inter(q2, alpha_p, weight=inter_weight)
        d = first.delta + first.delta / 2.0
    return requantize(d, second) - d


def sign_map(
    kind: SignKind,
    alpha_i: float,
    alpha_p: float,
    q1_range: Sequence[int],
    q2_range: Sequence[int],
    options: PipelineOptions = PipelineOptions(),
    base_seed: int = 0,
) -> StatMap:
    """
    sgn(d' - d) over a (q1, q2) grid

    Deterministic; no sampling is involved. ``base_seed`` is only carried as metadata.

    Returns:
        StatMap with values in {-1, 0, 1}
    """
    kind = SignKind(kind)
    alpha_i = validate_alpha(alpha_i, "alpha_i")
    alpha_p = validate_alpha(alpha_p, "alpha_p")
    q1_ticks = validate_q_range(q1_range, "q1")
    q2_ticks = validate_q_range(q2_range, "q2")

    values = np.array(
        [
            [
                np.sign(
                    centroid_shift(
                        kind,
                        q1,
                        q2,
                        alpha_i,
                        alpha_p,
                        options.intra_weight,
                        options.inter_weight,
                    )
                )
                for q2 in q2_ticks
            ]
            for q1 in q1_ticks
        ],
        dtype=float,
    )
    statistic = Statistic.SIGN_INTRA if kind == SignKind.INTRA_CENTROID else Statistic.SIGN_INTER
    return StatMap(
        statistic=statistic,
        q1_ticks=q1_ticks,
        q2_ticks=q2_ticks,
        values=values,
        alpha_i=alpha_i,
        alpha_p=alpha_p,
        count=0,
        base_seed=base_seed,
    )
