"""
Core components of vpflab
"""

from vpflab.core.errors import (
    ConfigurationError,
    DegenerateInputError,
    OutputError,
    PipelineError,
    TruncationError,
    ValidationError,
    VpfLabError,
)

__all__ = [
    "ConfigurationError",
    "DegenerateInputError",
    "OutputError",
    "PipelineError",
    "TruncationError",
    "ValidationError",
    "VpfLabError",
]
