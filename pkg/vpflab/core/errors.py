"""
Custom error classes for vpflab
"""

from typing import Any, Dict, Optional


class VpfLabError(Exception):
    """Base error class for vpflab"""

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(message)
        self.message = message
        self.error_code = error_code or "VPFLAB_ERROR"
        self.details: Dict[str, Any] = dict(details or {})

    def _attach(self, **context: Any) -> None:
        """Expose context as attributes; values that are set also go into details"""
        for key, value in context.items():
            setattr(self, key, value)
            if value is not None:
                self.details[key] = value

    def __str__(self) -> str:
        if self.details:
            return f"{self.error_code}: {self.message} - {self.details}"
        return f"{self.error_code}: {self.message}"


class ValidationError(VpfLabError):
    """A value outside its domain: q, alpha, variances, probabilities, ranges, CLI values"""

    field: Optional[str]
    value: Optional[Any]

    def __init__(
        self,
        message: str,
        field: Optional[str] = None,
        value: Optional[Any] = None,
        details: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(message, "VALIDATION_ERROR", details)
        self._attach(field=field, value=value)


class ConfigurationError(VpfLabError):
    """Config file and environment problems"""

    config_key: Optional[str]

    def __init__(
        self, message: str, config_key: Optional[str] = None, details: Optional[Dict[str, Any]] = None
    ) -> None:
        super().__init__(message, "CONFIGURATION_ERROR", details)
        self._attach(config_key=config_key)


class TruncationError(VpfLabError):
    """The distortion series did not reach its tail tolerance within the term budget"""

    terms: Optional[int]
    tail_mass: Optional[float]

    def __init__(
        self,
        message: str,
        terms: Optional[int] = None,
        tail_mass: Optional[float] = None,
        details: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(message, "TRUNCATION_ERROR", details)
        self._attach(terms=terms, tail_mass=tail_mass)


class DegenerateInputError(VpfLabError):
    """Sample moments of constant or too-short sequences"""

    statistic: Optional[str]

    def __init__(
        self, message: str, statistic: Optional[str] = None, details: Optional[Dict[str, Any]] = None
    ) -> None:
        super().__init__(message, "DEGENERATE_INPUT_ERROR", details)
        self._attach(statistic=statistic)


class PipelineError(VpfLabError):
    """Incomplete bundles, length mismatches and disagreeing VPF routes"""

    stage: Optional[str]

    def __init__(
        self, message: str, stage: Optional[str] = None, details: Optional[Dict[str, Any]] = None
    ) -> None:
        super().__init__(message, "PIPELINE_ERROR", details)
        self._attach(stage=stage)


class OutputError(VpfLabError):
    """Result files could not be written"""

    path: Optional[str]

    def __init__(
        self, message: str, path: Optional[str] = None, details: Optional[Dict[str, Any]] = None
    ) -> None:
        super().__init__(message, "OUTPUT_ERROR", details)
        self._attach(path=path)
