"""
Distortion of the deadzone quantizer under a Laplacian source
"""

import math
from typing import Dict, Optional, Tuple, Union

import numpy as np
from scipy import integrate, stats

from vpflab.core.errors import TruncationError, ValidationError
from vpflab.core.quantizer import requantize
from vpflab.models.ar_params import ARParams
from vpflab.models.laplacian_params import LaplacianParams
from vpflab.models.mb_prob_model import MBProbModel
from vpflab.models.pipeline_options import PipelineOptions
from vpflab.models.quant_mode import QuantMode
from vpflab.models.quant_spec import QuantSpec
from vpflab.models.truncation_policy import TruncationPolicy
from vpflab.models.weighting_matrix import WeightingMatrix
from vpflab.services.mode_probability import p_pmb_first
from vpflab.services.sampling import laplacian_sample, make_rng
from vpflab.utils.logger import Logger
from vpflab.utils.validation import validate_alpha, validate_positive, validate_q

METHODS = ("exact", "quadrature")


class DistortionService:
    """
    Expected squared reconstruction error of the deadzone quantizer

    The integral over the real line is split into the deadzone and the cells k >= 1 on both
    sides. Cell k covers [(k-1)*delta + alpha*delta/2, k*delta + alpha*delta/2) and reconstructs
    to floor(k*delta) (intra) or floor(k*delta + delta/2) (inter). Cells are added until the
    probability mass left outside them falls below the policy tolerance.
    """

    def __init__(
        self,
        method: str = "exact",
        policy: Optional[TruncationPolicy] = None,
        logger: Optional[Logger] = None,
    ) -> None:
        """
        Initialize distortion service

        Args:
            method: "exact" (closed-form antiderivatives) or "quadrature" (scipy.integrate.quad)
            policy: Default truncation policy
            logger: Logger instance
        """
        if method not in METHODS:
            raise ValidationError(f"Unknown distortion method: {method}", field="method", value=method)
        self.method = method
        self.policy = policy or TruncationPolicy()
        self.logger = logger or Logger("DistortionService")

    def distortion_intra(
        self,
        delta: float,
        alpha: float,
        src: LaplacianParams,
        policy: Optional[TruncationPolicy] = None,
    ) -> float:
        """
        Distortion with intra reconstruction levels floor(k*delta)

        Raises:
            ValidationError: If alpha or delta is out of range
            TruncationError: If the series does not converge within the term budget
        """
        return self._distortion(delta, alpha, src, policy or self.policy, QuantMode.INTRA)

    def distortion_inter(
        self,
        delta: float,
        alpha: float,
        src: LaplacianParams,
        policy: Optional[TruncationPolicy] = None,
    ) -> float:
        """
        Distortion with inter reconstruction levels floor(k*delta + delta/2)

        Raises:
            ValidationError: If alpha or delta is out of range
            TruncationError: If the series does not converge within the term budget
        """
        return self._distortion(delta, alpha, src, policy or self.policy, QuantMode.INTER)

    def distortion(self, spec: QuantSpec, src: LaplacianParams) -> float:
        """Distortion of a configured quantizer"""
        return self._distortion(spec.delta, spec.alpha, src, self.policy, spec.mode)

    def monte_carlo_distortion(
        self, spec: QuantSpec, src: LaplacianParams, count: int, seed: int
    ) -> Tuple[float, float]:
        """
        Monte Carlo estimate of the distortion

        Returns:
            Tuple of (mean squared error, standard error of the mean)
        """
        if count < 2:
            raise ValidationError("count must be at least 2", field="count", value=count)
        samples = laplacian_sample(src, count, make_rng(seed))
        squared = (requantize(samples, spec) - samples) ** 2
        return float(np.mean(squared)), float(np.std(squared, ddof=1) / math.sqrt(count))

    def predict_error_variances(
        self,
        q1: int,
        alpha_i: float,
        alpha_p: float,
        ar: Optional[ARParams] = None,
        options: Optional[PipelineOptions] = None,
        mb_model: Optional[MBProbModel] = None,
    ) -> Dict[str, float]:
        """
        Predicted first-pass error variances

        The intra error variance is the distortion of x_n. The P-frame error mixes the distortion
        of the inter residue (P-MB, probability p1) with the intra distortion standing in for
        S-MB; I-MBs are neglected.

        Returns:
            Dictionary with var_e_i1, var_e_p1, p1 and sigma_u2
        """
        ar = ar or ARParams()
        options = options or PipelineOptions()
        q1 = validate_q(q1, "q1")

        intra = QuantSpec.intra(q1, alpha_i, weight=options.intra_weight)
        inter = QuantSpec.inter(q1, alpha_p, weight=options.inter_weight)
        sigma_u2 = ar.residue_variance()

        d_x = self.distortion(intra, LaplacianParams(0.0, ar.var_n))
        d_u = self.distortion(inter, LaplacianParams(0.0, sigma_u2))
        p1 = p_pmb_first(q1, mb_model)

        return {
            "var_e_i1": d_x,
            "var_e_p1": p1 * d_u + (1.0 - p1) * d_x,
            "p1": p1,
            "sigma_u2": sigma_u2,
        }

    def block_distortion(
        self,
        matrix: WeightingMatrix,
        q: int,
        alpha: float,
        variances: Union[float, np.ndarray],
        mode: QuantMode = QuantMode.INTRA,
    ) -> float:
        """
        Total AC distortion of an 8x8 block

        Args:
            matrix: Weighting matrix giving the step of each position
            q: Quantization parameter
            alpha: Deadzone factor
            variances: Source variance per position (8x8) or one variance for all positions
            mode: Reconstruction rule

        Returns:
            Sum of the 63 AC coefficient distortions (DC excluded)
        """
        grid = np.broadcast_to(np.asarray(variances, dtype=float), (8, 8))
        total = 0.0
        for i, j in matrix.ac_positions():
            spec = QuantSpec(q=q, alpha=alpha, weight=matrix.entry(i, j), mode=mode)
            total += self.distortion(spec, LaplacianParams(0.0, float(grid[i, j])))
        return total

    def _distortion(
        self,
        delta: float,
        alpha: float,
        src: LaplacianParams,
        policy: TruncationPolicy,
        mode: QuantMode,
    ) -> float:
        delta = validate_positive(delta, "delta")
        alpha = validate_alpha(alpha)

        terms = self._term_count(delta, alpha, src, policy)
        half = alpha * delta / 2.0
        k = np.arange(1, terms + 1, dtype=float)
        lower = (k - 1.0) * delta + half
        upper = k * delta + half
        if mode == QuantMode.INTER:
            levels = np.floor(k * delta + delta / 2.0)
        else:
            levels = np.floor(k * delta)

        if self.method == "exact":
            moment = _interval_moments
        else:
            moment = _quadrature_moments

        total = float(moment(np.array([-half]), np.array([half]), np.array([0.0]), src).sum())
        if terms:
            total += float(moment(lower, upper, levels, src).sum())
            total += float(moment(-upper, -lower, -levels, src).sum())

        self.logger.debug(
            "Distortion evaluated",
            mode=str(mode),
            delta=delta,
            alpha=alpha,
            terms=terms,
            value=total,
        )
        return total

    def _term_count(
        self, delta: float, alpha: float, src: LaplacianParams, policy: TruncationPolicy
    ) -> int:
        """Number of cells per side leaving at most tail_tol of the mass outside"""
        reach = abs(src.mu) + src.scale * math.log(1.0 / policy.tail_tol)
        terms = max(0, math.ceil((reach - alpha * delta / 2.0) / delta))
        if terms > policy.max_terms:
            raise TruncationError(
                f"Distortion series needs {terms} terms, budget is {policy.max_terms}",
                terms=terms,
                tail_mass=_tail_mass(policy.max_terms * delta + alpha * delta / 2.0, src),
            )

        tail = _tail_mass(terms * delta + alpha * delta / 2.0, src)
        if tail > policy.tail_tol * (1.0 + 1e-9):
            raise TruncationError(
                "Tail mass above tolerance after truncation", terms=terms, tail_mass=tail
            )
        return terms


def _tail_mass(edge: float, src: LaplacianParams) -> float:
    """Probability of |x| >= edge"""
    return float(
        stats.laplace.sf(edge, loc=src.mu, scale=src.scale)
        + stats.laplace.cdf(-edge, loc=src.mu, scale=src.scale)
    )


def _interval_moments(
    a: np.ndarray, b: np.ndarray, c: np.ndarray, src: LaplacianParams
) -> np.ndarray:
    """
    Integrals of (x - c)^2 f(x) over [a, b] with f the Laplacian density

    Each interval is split at the mean; both halves use closed-form antiderivatives in the shifted
    variable t = x - mu.
    """
    mu, s = src.mu, src.scale
    shift = c - mu

    def right(t: np.ndarray) -> np.ndarray:
        v = t - shift
        return -0.5 * np.exp(-t / s) * (v * v + 2.0 * s * v + 2.0 * s * s)

    def left(t: np.ndarray) -> np.ndarray:
        v = t - shift
        return 0.5 * np.exp(t / s) * (v * v - 2.0 * s * v + 2.0 * s * s)

    upper_lo = np.maximum(a, mu) - mu
    upper_hi = np.maximum(b, mu) - mu
    lower_lo = np.minimum(a, mu) - mu
    lower_hi = np.minimum(b, mu) - mu

    return (right(upper_hi) - right(upper_lo)) + (left(lower_hi) - left(lower_lo))


def _quadrature_moments(
    a: np.ndarray, b: np.ndarray, c: np.ndarray, src: LaplacianParams
) -> np.ndarray:
    """Adaptive-quadrature counterpart of _interval_moments"""
    out = np.empty(a.shape, dtype=float)
    for i, (lo, hi, level) in enumerate(zip(a, b, c)):
        points = [src.mu] if lo < src.mu < hi else None
        value, _ = integrate.quad(
            lambda x, level=level: (x - level) ** 2
            * stats.laplace.pdf(x, loc=src.mu, scale=src.scale),
            lo,
            hi,
            points=points,
            epsabs=1e-14,
            epsrel=1e-10,
            limit=200,
        )
        out[i] = value
    return out
