"""
Progress tracking models
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional


class SweepStage(str, Enum):
    """Stages of a sweep"""

    INITIALIZING = "initializing"
    RUNNING = "running"
    COMPLETE = "complete"
    ERROR = "error"


@dataclass
class ProgressInfo:
    """Information about sweep progress"""

    stage: SweepStage
    message: str
    current: int = 0
    total: int = 0
    percentage: float = 0.0
    statistic: Optional[str] = None
    current_cell: Optional[str] = None
    error: Optional[str] = None

    def update_percentage(self) -> None:
        """Update percentage based on current and total"""
        if self.total > 0:
            self.percentage = min(100.0, (self.current / self.total) * 100)
        else:
            self.percentage = 0.0

    def is_complete(self) -> bool:
        """Check if the sweep is complete"""
        return self.stage == SweepStage.COMPLETE

    def has_error(self) -> bool:
        """Check if the sweep failed"""
        return self.stage == SweepStage.ERROR

    def __repr__(self) -> str:
        return (
            f"ProgressInfo(stage={self.stage}, message={self.message}, "
            f"percentage={self.percentage:.1f}%)"
        )
