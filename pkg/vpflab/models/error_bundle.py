"""
Quantization-error realizations produced by the two compression passes
"""

from dataclasses import dataclass, replace
from typing import Dict, Optional

import numpy as np

from vpflab.core.errors import PipelineError, ValidationError


@dataclass(eq=False)
class ModeDraws:
    """Per-sample P-MB indicators, one set per recipe site (True means P-MB)"""

    recon_nm1: np.ndarray
    e_p1_n: np.ndarray
    e_p1_nm1: np.ndarray
    e_p2_nm1: Optional[np.ndarray] = None
    # uniforms behind every site when modes are coupled
    shared_uniforms: Optional[np.ndarray] = None

    def __post_init__(self) -> None:
        """Validate equal lengths"""
        arrays = {**self._sites(), "shared_uniforms": self.shared_uniforms}
        sizes = {name: np.size(value) for name, value in arrays.items() if value is not None}
        if len(set(sizes.values())) > 1:
            raise ValidationError("Mode draws must share one length", details=sizes)

    def _sites(self) -> Dict[str, Optional[np.ndarray]]:
        return {
            "recon_nm1": self.recon_nm1,
            "e_p1_n": self.e_p1_n,
            "e_p1_nm1": self.e_p1_nm1,
            "e_p2_nm1": self.e_p2_nm1,
        }

    def p_mb_fraction(self, site: str) -> float:
        """Observed fraction of P-MB draws at a recipe site"""
        draws = self._sites().get(site)
        if draws is None:
            raise ValidationError(f"No draws recorded for site {site}", field="site", value=site)
        return float(np.mean(draws))


@dataclass(eq=False)
class ErrorBundle:
    """
    Quantization-error signals of one run

    e_i1_n and e_p1_n are the errors at n when n was an I- or P-frame in the first compression;
    e_p1_nm1 and e_p2_nm1 are the first- and second-compression errors at n-1. The
    reconstructions that feed later stages are retained alongside.
    """

    e_i1_n: np.ndarray
    e_p1_n: np.ndarray
    e_p1_nm1: np.ndarray
    x_nm2_rec: np.ndarray
    x_nm1_rec: np.ndarray
    x_n_rec: np.ndarray
    modes: ModeDraws
    e_p2_nm1: Optional[np.ndarray] = None
    y_nm2_rec: Optional[np.ndarray] = None

    def __post_init__(self) -> None:
        """Validate equal lengths"""
        sizes = {
            name: np.size(getattr(self, name))
            for name in (
                "e_i1_n",
                "e_p1_n",
                "e_p1_nm1",
                "x_nm2_rec",
                "x_nm1_rec",
                "x_n_rec",
                "e_p2_nm1",
                "y_nm2_rec",
            )
            if getattr(self, name) is not None
        }
        if len(set(sizes.values())) != 1:
            raise ValidationError("Error sequences must share one length", details=sizes)

    @property
    def length(self) -> int:
        """Number of samples"""
        return int(self.e_i1_n.size)

    def is_complete(self) -> bool:
        """Check whether the second pass has been applied"""
        return self.e_p2_nm1 is not None

    def require_complete(self) -> None:
        """
        Ensure the second-pass error is present

        Raises:
            PipelineError: If the bundle only holds first-pass errors
        """
        if not self.is_complete():
            raise PipelineError(
                "Error bundle is incomplete: second pass has not been applied",
                stage="second_pass",
            )

    def with_second_pass(
        self, e_p2_nm1: np.ndarray, y_nm2_rec: np.ndarray, draws: np.ndarray
    ) -> "ErrorBundle":
        """Return a complete bundle carrying the second-pass results"""
        return replace(
            self,
            e_p2_nm1=e_p2_nm1,
            y_nm2_rec=y_nm2_rec,
            modes=replace(self.modes, e_p2_nm1=draws),
        )

    def __repr__(self) -> str:
        return f"ErrorBundle(length={self.length}, complete={self.is_complete()})"


@dataclass(frozen=True)
class VpfDifference:
    """Var(W)|I1 - Var(W)|P1 evaluated directly and through its covariance expansion"""

    direct: float
    decomposed: float
    scale: float

    def agrees(self, rtol: float = 1e-9) -> bool:
        """Check route agreement relative to the larger of the result and the variance scale"""
        reference = max(abs(self.direct), self.scale)
        return abs(self.direct - self.decomposed) <= rtol * reference
