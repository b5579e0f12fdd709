"""
Utility functions for vpflab
"""

from vpflab.utils.logger import Logger
from vpflab.utils.statistics import pearson_corr, sample_cov, sample_var
from vpflab.utils.validation import (
    is_valid_alpha,
    is_valid_q,
    parse_int_range,
    parse_real,
    parse_real_list,
    validate_alpha,
    validate_q,
)

__all__ = [
    "Logger",
    "is_valid_alpha",
    "is_valid_q",
    "parse_int_range",
    "parse_real",
    "parse_real_list",
    "pearson_corr",
    "sample_cov",
    "sample_var",
    "validate_alpha",
    "validate_q",
]
