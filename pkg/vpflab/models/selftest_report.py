"""
Self-test report model
"""

from dataclasses import dataclass, field
from typing import List


@dataclass
class SelfTestReport:
    """Outcome of the oracle suite"""

    is_valid: bool = True
    checks_run: int = 0
    errors: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    def add_check(self, name: str, passed: bool, detail: str = "") -> None:
        """Record one check, failing the report when it did not pass"""
        self.checks_run += 1
        if not passed:
            self.add_error(f"{name}: {detail}" if detail else name)

    def add_error(self, error: str) -> None:
        """Add an error message"""
        self.errors.append(error)
        self.is_valid = False

    def add_warning(self, warning: str) -> None:
        """Add a warning message"""
        self.warnings.append(warning)

    def get_error_count(self) -> int:
        """Get number of failed checks"""
        return len(self.errors)

    def __repr__(self) -> str:
        return (
            f"SelfTestReport(valid={self.is_valid}, checks={self.checks_run}, "
            f"errors={len(self.errors)}, warnings={len(self.warnings)})"
        )
