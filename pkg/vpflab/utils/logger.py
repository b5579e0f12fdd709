"""
Structured stderr logging for vpflab
"""

import logging
import sys
from typing import Any, Dict, Optional

import numpy as np

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

# Context values rendered wider than this are summarized as type[len]
MAX_CONTEXT_WIDTH = 100


def _numeric_level(level: str) -> int:
    value = logging.getLevelName(level.upper())
    if not isinstance(value, int):
        raise ValueError(f"Unknown log level: {level}")
    return value


class Logger:
    """
    Named logger that appends keyword context as ``message | key=value ...``

    Output goes to stderr; stdout is reserved for CSV/JSON results.
    """

    def __init__(self, name: str, level: str = "INFO") -> None:
        """
        Initialize logger

        Args:
            name: Logger name
            level: Log level (DEBUG, INFO, WARNING, ERROR)
        """
        self.logger = logging.getLogger(name)
        self.logger.handlers = []

        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT))
        self.logger.addHandler(handler)
        self.set_level(level)

    def debug(self, message: str, **context: Any) -> None:
        """Log debug message"""
        self._log(logging.DEBUG, message, context)

    def info(self, message: str, **context: Any) -> None:
        """Log info message"""
        self._log(logging.INFO, message, context)

    def warning(self, message: str, **context: Any) -> None:
        """Log warning message"""
        self._log(logging.WARNING, message, context)

    def error(self, message: str, **context: Any) -> None:
        """Log error message"""
        self._log(logging.ERROR, message, context)

    def set_level(self, level: str) -> None:
        """Set the level of the logger and its handlers"""
        numeric = _numeric_level(level)
        self.logger.setLevel(numeric)
        for handler in self.logger.handlers:
            handler.setLevel(numeric)

    def _log(self, level: int, message: str, context: Dict[str, Any]) -> None:
        # context is rendered only for records that pass the level filter
        if not self.logger.isEnabledFor(level):
            return
        extra = self._format_kwargs(context)
        self.logger.log(level, f"{message} | {extra}" if extra else message)

    def _format_kwargs(self, kwargs: Dict[str, Any]) -> str:
        return " ".join(f"{key}={self._render(value)}" for key, value in kwargs.items())

    @staticmethod
    def _render(value: Any) -> str:
        if isinstance(value, np.ndarray):
            return f"ndarray[{value.size}]"
        if isinstance(value, (list, tuple, dict)):
            text = str(value)
            return f"{type(value).__name__}[{len(value)}]" if len(text) > MAX_CONTEXT_WIDTH else text
        return str(value)

    @classmethod
    def create_logger(cls, name: str, level: Optional[str] = None) -> "Logger":
        """Create a logger at the given level, INFO by default"""
        return cls(name, level or "INFO")
