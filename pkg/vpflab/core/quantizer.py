"""
MPEG-2 deadzone scalar quantizer

Scalar inputs return Python scalars; array inputs are processed elementwise and return arrays.
"""

from typing import Union, overload

import numpy as np

from vpflab.core.errors import ValidationError
from vpflab.models.quant_mode import QuantMode
from vpflab.models.quant_spec import QuantSpec
from vpflab.utils.validation import validate_alpha, validate_positive, validate_q

ArrayLike = Union[float, int, np.ndarray]


def quant_step(q: int, weight: float) -> float:
    """
    Size of each quantization step

    Args:
        q: Quantization parameter in {2, ..., 31}
        weight: Weighting-matrix entry

    Returns:
        q * weight / 8, unrounded

    Raises:
        ValidationError: If q is out of range or weight is not positive
    """
    q = validate_q(q)
    weight = validate_positive(weight, "weight")
    return q * weight / 8.0


def deadzone_width(alpha: float, delta: float) -> float:
    """
    Full width of the zero cell

    Raises:
        ValidationError: If alpha lies outside [1, 2] or delta is not positive
    """
    alpha = validate_alpha(alpha)
    delta = validate_positive(delta, "delta")
    return alpha * delta


@overload
def quantize(u: float, spec: QuantSpec) -> int: ...


@overload
def quantize(u: np.ndarray, spec: QuantSpec) -> np.ndarray: ...


def quantize(u: ArrayLike, spec: QuantSpec) -> Union[int, np.ndarray]:
    """
    Quantization index sgn(u) * floor((|u| + delta*(1 - alpha/2)) / delta)

    The formula is the same in both modes; the mode only determines which step and deadzone factor
    the caller configured.

    Raises:
        ValidationError: If u holds a non-finite value
    """
    values = np.asarray(u, dtype=float)
    if not np.all(np.isfinite(values)):
        raise ValidationError("Quantizer input must be finite", field="u")

    delta = spec.delta
    offset = delta * (1.0 - spec.alpha / 2.0)
    index = np.sign(values) * np.floor((np.abs(values) + offset) / delta)

    if index.ndim == 0:
        return int(index)
    return index.astype(np.int64)


@overload
def dequantize(q_idx: int, spec: QuantSpec) -> float: ...


@overload
def dequantize(q_idx: np.ndarray, spec: QuantSpec) -> np.ndarray: ...


def dequantize(q_idx: Union[int, np.ndarray], spec: QuantSpec) -> Union[float, np.ndarray]:
    """
    Reconstruction of a quantization index

    Intra: sgn(k) * floor(delta*|k|). Inter: sgn(k) * floor(delta*|k| + delta/2). Index 0
    reconstructs to 0 in both modes.
    """
    index = np.asarray(q_idx, dtype=float)
    magnitude = spec.delta * np.abs(index)
    if spec.mode == QuantMode.INTER:
        magnitude = magnitude + spec.delta / 2.0

    value = np.sign(index) * np.floor(magnitude)

    if value.ndim == 0:
        return float(value)
    return value


@overload
def requantize(u: float, spec: QuantSpec) -> float: ...


@overload
def requantize(u: np.ndarray, spec: QuantSpec) -> np.ndarray: ...


def requantize(u: ArrayLike, spec: QuantSpec) -> Union[float, np.ndarray]:
    """Quantize then dequantize with the same configuration"""
    return dequantize(quantize(u, spec), spec)
