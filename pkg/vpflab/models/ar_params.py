"""
Constants of the synthetic AR(1) source and prediction processes
"""

import math
from dataclasses import asdict, dataclass
from typing import Any, Dict

from vpflab.models.laplacian_params import LaplacianParams
from vpflab.utils.validation import validate_open_unit, validate_positive


@dataclass(frozen=True)
class ARParams:
    """Static-scene surrogate: source variance, temporal and prediction correlations"""

    sigma_x2: float = 2500.0
    rho: float = 0.99
    sigma_r2: float = 10.0
    rho_p: float = 0.88
    sigma_nu2: float = 1.0

    def __post_init__(self) -> None:
        """Validate the process constants"""
        validate_positive(self.sigma_x2, "sigma_x2")
        validate_positive(self.sigma_r2, "sigma_r2")
        validate_positive(self.sigma_nu2, "sigma_nu2")
        validate_open_unit(self.rho, "rho")
        validate_open_unit(self.rho_p, "rho_p")

    @property
    def source(self) -> LaplacianParams:
        """Distribution of x_{n-2}"""
        return LaplacianParams(mu=0.0, sigma2=self.sigma_x2)

    @property
    def var_nm1(self) -> float:
        """Variance of x_{n-1}"""
        return self.rho**2 * self.sigma_x2 + self.sigma_r2

    @property
    def var_n(self) -> float:
        """Variance of x_n"""
        return self.rho**2 * self.var_nm1 + self.sigma_r2

    def lag_correlation(self) -> float:
        """Correlation between x_{n-1} and x_{n-2}"""
        return self.rho * math.sqrt(self.sigma_x2) / math.sqrt(self.var_nm1)

    def residue_variance(self) -> float:
        """
        Variance of the unquantized inter residue x_n - rho_p*x_{n-1} - nu_n

        Used as sigma_U^2 when predicting the inter distortion.
        """
        return (
            self.var_n
            - 2.0 * self.rho_p * self.rho * self.var_nm1
            + self.rho_p**2 * self.var_nm1
            + self.sigma_nu2
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return asdict(self)
