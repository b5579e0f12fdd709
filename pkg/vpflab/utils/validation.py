"""
Validation and parsing utilities for vpflab
"""

import math
import re
from fractions import Fraction
from typing import Iterable, List

from vpflab.core.errors import ValidationError

Q_MIN = 2
Q_MAX = 31
ALPHA_MIN = 1.0
ALPHA_MAX = 2.0

# Inclusive integer range, e.g. 2..31
RANGE_PATTERN = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def validate_q(q: int, field: str = "q") -> int:
    """
    Validate a quantization parameter

    Args:
        q: Quantization parameter
        field: Field name reported on failure

    Returns:
        The quantization parameter as int

    Raises:
        ValidationError: If q is not an integer in {2, ..., 31}
    """
    if isinstance(q, bool) or not float(q).is_integer():
        raise ValidationError(f"Quantization parameter must be an integer: {q}", field=field, value=q)

    q = int(q)
    if not Q_MIN <= q <= Q_MAX:
        raise ValidationError(
            f"Quantization parameter out of range: {q}. Expected {Q_MIN}..{Q_MAX}",
            field=field,
            value=q,
        )
    return q


def validate_alpha(alpha: float, field: str = "alpha") -> float:
    """
    Validate a deadzone factor

    Args:
        alpha: Deadzone factor
        field: Field name reported on failure

    Returns:
        The deadzone factor as float

    Raises:
        ValidationError: If alpha lies outside [1, 2]
    """
    alpha = float(alpha)
    if not math.isfinite(alpha) or not ALPHA_MIN <= alpha <= ALPHA_MAX:
        raise ValidationError(
            f"Deadzone factor outside [{ALPHA_MIN:g}, {ALPHA_MAX:g}]: {alpha}",
            field=field,
            value=alpha,
        )
    return alpha


def validate_positive(value: float, field: str) -> float:
    """
    Validate a strictly positive finite real

    Raises:
        ValidationError: If value is not finite or not > 0
    """
    value = float(value)
    if not math.isfinite(value) or value <= 0:
        raise ValidationError(f"{field} must be positive: {value}", field=field, value=value)
    return value


def validate_open_unit(value: float, field: str) -> float:
    """
    Validate a real in the open interval (0, 1)

    Raises:
        ValidationError: If value is outside (0, 1)
    """
    value = float(value)
    if not 0.0 < value < 1.0:
        raise ValidationError(f"{field} must lie in (0, 1): {value}", field=field, value=value)
    return value


def validate_probability(value: float, field: str = "probability") -> float:
    """
    Validate a probability in the closed interval [0, 1]

    Raises:
        ValidationError: If value is outside [0, 1]
    """
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ValidationError(f"{field} must lie in [0, 1]: {value}", field=field, value=value)
    return value


def validate_q_range(values: Iterable[int], field: str) -> List[int]:
    """
    Validate a nonempty list of quantization parameters

    Returns:
        The validated list, order preserved

    Raises:
        ValidationError: If the list is empty or holds an out-of-range value
    """
    result = [validate_q(v, field=field) for v in values]
    if not result:
        raise ValidationError(f"{field} range cannot be empty", field=field)
    return result


def validate_alpha_set(values: Iterable[float], field: str = "alpha_i") -> List[float]:
    """
    Validate a nonempty list of deadzone factors

    Raises:
        ValidationError: If the list is empty or holds a value outside [1, 2]
    """
    result = [validate_alpha(v, field=field) for v in values]
    if not result:
        raise ValidationError(f"{field} set cannot be empty", field=field)
    return result


def parse_int_range(text: str, field: str) -> List[int]:
    """
    Parse an integer range expression

    Accepts ``a..b`` (inclusive) or a comma-separated list such as ``2,4,8``.

    Args:
        text: Range expression
        field: Field name reported on failure

    Returns:
        List of integers

    Raises:
        ValidationError: If the expression is malformed or empty
    """
    text = text.strip()
    if not text:
        raise ValidationError(f"{field} range cannot be empty", field=field, value=text)

    match = RANGE_PATTERN.match(text)
    if match:
        start, stop = int(match.group(1)), int(match.group(2))
        if start > stop:
            raise ValidationError(
                f"{field} range is empty: {text}", field=field, value=text
            )
        return list(range(start, stop + 1))

    values = []
    for token in text.split(","):
        token = token.strip()
        try:
            values.append(int(token))
        except ValueError:
            raise ValidationError(
                f"Malformed integer in {field}: {token!r}", field=field, value=text
            )
    return values


def parse_real(text: str, field: str) -> float:
    """
    Parse a real number, accepting fractions such as ``5/4``

    Raises:
        ValidationError: If the text is not a number
    """
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"Malformed number in {field}: {text!r}", field=field, value=text)


def parse_real_list(text: str, field: str) -> List[float]:
    """
    Parse a comma-separated list of reals

    Raises:
        ValidationError: If the list is empty or an entry is malformed
    """
    tokens = [t for t in text.split(",") if t.strip()]
    if not tokens:
        raise ValidationError(f"{field} set cannot be empty", field=field, value=text)
    return [parse_real(t, field) for t in tokens]


def is_valid_q(q: int) -> bool:
    """
    Check if a quantization parameter is valid

    Args:
        q: Quantization parameter

    Returns:
        True if valid, False otherwise
    """
    try:
        validate_q(q)
        return True
    except ValidationError:
        return False


def is_valid_alpha(alpha: float) -> bool:
    """
    Check if a deadzone factor is valid

    Args:
        alpha: Deadzone factor

    Returns:
        True if valid, False otherwise
    """
    try:
        validate_alpha(alpha)
        return True
    except ValidationError:
        return False
