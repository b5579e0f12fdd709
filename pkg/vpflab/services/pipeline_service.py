"""
Synthetic double-compression pipeline
"""

from typing import Optional

import numpy as np

from vpflab.core.errors import PipelineError
from vpflab.core.quantizer import requantize
from vpflab.models.ar_params import ARParams
from vpflab.models.error_bundle import ErrorBundle, ModeDraws, VpfDifference
from vpflab.models.mb_prob_model import MBProbModel
from vpflab.models.pipeline_options import (
    PipelineOptions,
    PredictionSource,
    SkipReconstruction,
)
from vpflab.models.quant_spec import QuantSpec
from vpflab.models.signal_bundle import SignalBundle
from vpflab.services.mode_probability import p_pmb_first, p_pmb_second
from vpflab.services.sampling import (
    derive_seed,
    gaussian_sample,
    laplacian_sample,
    make_rng,
    mode_uniforms,
)
from vpflab.utils.logger import Logger
from vpflab.utils.statistics import sample_cov, sample_var
from vpflab.utils.validation import validate_probability


class SynthPipelineService:
    """
    Runs both compressions of an AR(1) static-scene surrogate

    The frame at n-2 is always an I-frame and the frame at n-1 always a P-frame. The frame at n
    is either an I-frame (errors e_i1_n) or a P-frame (errors e_p1_n) of the first compression.
    The second compression re-encodes n-1 as a P-frame with a new quantization parameter.
    """

    def __init__(
        self,
        ar: Optional[ARParams] = None,
        options: Optional[PipelineOptions] = None,
        mb_model: Optional[MBProbModel] = None,
        logger: Optional[Logger] = None,
    ) -> None:
        """
        Initialize pipeline service

        Args:
            ar: Source and prediction constants
            options: Mode coupling, skip reconstruction, prediction source and weights
            mb_model: P-MB probability laws
            logger: Logger instance
        """
        self.ar = ar or ARParams()
        self.options = options or PipelineOptions()
        self.mb_model = mb_model or MBProbModel()
        self.logger = logger or Logger("SynthPipelineService")

    def gen_ar_signals(self, count: int, seed: int) -> SignalBundle:
        """
        Generate x_{n-2}, x_{n-1}, x_n

        x_{n-2} is Laplacian with zero mean; the innovations r_{n-1}, r_n are independent
        zero-mean Gaussians.

        Args:
            count: Number of samples
            seed: Stream seed

        Returns:
            SignalBundle with the recurrences applied exactly
        """
        rng = make_rng(seed)
        x_nm2 = laplacian_sample(self.ar.source, count, rng)
        r_nm1 = gaussian_sample(0.0, self.ar.sigma_r2, count, rng)
        r_n = gaussian_sample(0.0, self.ar.sigma_r2, count, rng)

        x_nm1 = self.ar.rho * x_nm2 + r_nm1
        x_n = self.ar.rho * x_nm1 + r_n
        return SignalBundle(x_nm2=x_nm2, x_nm1=x_nm1, x_n=x_n, r_nm1=r_nm1, r_n=r_n)

    def first_pass(
        self,
        sig: SignalBundle,
        q1: int,
        alpha_i: float,
        alpha_p: float,
        p1: float,
        seed: int,
    ) -> ErrorBundle:
        """
        First compression

        Returns:
            Partial ErrorBundle with e_i1_n, e_p1_n, e_p1_nm1 and the reconstructions
        """
        p1 = validate_probability(p1, "p1")
        intra = QuantSpec.intra(q1, alpha_i, weight=self.options.intra_weight)
        inter = QuantSpec.inter(q1, alpha_p, weight=self.options.inter_weight)

        count = sig.length
        rng = make_rng(seed)
        nu_nm1 = gaussian_sample(0.0, self.ar.sigma_nu2, count, rng)
        nu_n = gaussian_sample(0.0, self.ar.sigma_nu2, count, rng)
        uniforms = [mode_uniforms(count, rng) for _ in range(3)]
        if self.options.coupled_modes:
            uniforms = [uniforms[0]] * 3
        pmb_recon, pmb_n, pmb_nm1 = (u < p1 for u in uniforms)

        x_nm2_rec = requantize(sig.x_nm2, intra)

        # n-1 as a P-frame predicted from the I-frame at n-2
        pred_nm1 = self.ar.rho_p * x_nm2_rec + nu_nm1
        u_nm1 = sig.x_nm1 - pred_nm1
        u_nm1_rec = requantize(u_nm1, inter)
        # a skipped macroblock has zero motion and no residue: it repeats the reference
        if self.options.skip_reconstruction == SkipReconstruction.INTRA_REQUANT:
            skipped = requantize(sig.x_nm1, intra)
        else:
            skipped = x_nm2_rec
        x_nm1_rec = np.where(pmb_recon, u_nm1_rec + pred_nm1, skipped)

        x_n_rec = requantize(sig.x_n, intra)
        e_i1_n = x_n_rec - sig.x_n

        pred_n = self.ar.rho_p * x_nm1_rec + nu_n
        u_n = sig.x_n - pred_n
        e_p1_n = np.where(pmb_n, requantize(u_n, inter) - u_n, x_nm1_rec - sig.x_n)

        e_p1_nm1 = np.where(pmb_nm1, u_nm1_rec - u_nm1, x_nm2_rec - sig.x_nm1)

        modes = ModeDraws(
            recon_nm1=pmb_recon,
            e_p1_n=pmb_n,
            e_p1_nm1=pmb_nm1,
            shared_uniforms=uniforms[0] if self.options.coupled_modes else None,
        )
        self.logger.debug("First pass complete", q1=q1, alpha_i=alpha_i, p1=p1, count=count)
        return ErrorBundle(
            e_i1_n=e_i1_n,
            e_p1_n=e_p1_n,
            e_p1_nm1=e_p1_nm1,
            x_nm2_rec=x_nm2_rec,
            x_nm1_rec=x_nm1_rec,
            x_n_rec=x_n_rec,
            modes=modes,
        )

    def second_pass(
        self,
        sig: SignalBundle,
        first: ErrorBundle,
        q2: int,
        alpha_i: float,
        alpha_p: float,
        p2: float,
        seed: int,
    ) -> ErrorBundle:
        """
        Second compression of the frame at n-1

        Returns:
            Complete ErrorBundle carrying e_p2_nm1 and y'_{n-2}

        Raises:
            PipelineError: If the first-pass bundle does not match the signal length
        """
        if first.length != sig.length:
            raise PipelineError(
                f"First pass has {first.length} samples, signals have {sig.length}",
                stage="second_pass",
            )
        p2 = validate_probability(p2, "p2")
        intra = QuantSpec.intra(q2, alpha_i, weight=self.options.intra_weight)
        inter = QuantSpec.inter(q2, alpha_p, weight=self.options.inter_weight)

        count = sig.length
        rng = make_rng(seed)
        nu_nm1 = gaussian_sample(0.0, self.ar.sigma_nu2, count, rng)
        uniforms = mode_uniforms(count, rng)
        if self.options.coupled_modes and first.modes.shared_uniforms is not None:
            uniforms = first.modes.shared_uniforms
        pmb = uniforms < p2

        y_nm2_rec = requantize(first.x_nm2_rec, intra)
        if self.options.second_pass_pred_source == PredictionSource.SECOND_RECON:
            reference = y_nm2_rec
        else:
            reference = first.x_nm2_rec

        pred = self.ar.rho_p * reference + nu_nm1
        w = first.x_nm1_rec - pred
        e_p2_nm1 = np.where(pmb, requantize(w, inter) - w, y_nm2_rec - first.x_nm1_rec)

        self.logger.debug("Second pass complete", q2=q2, alpha_i=alpha_i, p2=p2, count=count)
        return first.with_second_pass(e_p2_nm1=e_p2_nm1, y_nm2_rec=y_nm2_rec, draws=pmb)

    def run(
        self,
        q1: int,
        alpha_i: float,
        alpha_p: float,
        count: int,
        seed: int,
        q2: Optional[int] = None,
    ) -> ErrorBundle:
        """
        Full pipeline for one cell

        Signals, first and second pass draw from streams derived from seed. The mode
        probabilities follow the configured laws. Without q2 only the first pass runs.
        """
        sig = self.gen_ar_signals(count, derive_seed(seed, "signals"))
        p1 = p_pmb_first(q1, self.mb_model)
        first = self.first_pass(sig, q1, alpha_i, alpha_p, p1, derive_seed(seed, "first_pass"))
        if q2 is None:
            return first

        p2 = p_pmb_second(q1, q2, self.mb_model)
        return self.second_pass(
            sig, first, q2, alpha_i, alpha_p, p2, derive_seed(seed, "second_pass")
        )


def vpf_difference(errs: ErrorBundle) -> VpfDifference:
    """
    Var(W)|I1 - Var(W)|P1 by direct evaluation and by its covariance expansion

    Raises:
        PipelineError: If the bundle lacks the second-pass error
    """
    errs.require_complete()
    assert errs.e_p2_nm1 is not None

    a, b = errs.e_i1_n, errs.e_p1_n
    c1, c2 = errs.e_p1_nm1, errs.e_p2_nm1

    var_w_i1 = sample_var(a - c1 - c2)
    var_w_p1 = sample_var(b - c1 - c2)
    var_a, var_b = sample_var(a), sample_var(b)

    decomposed = (
        var_a
        - var_b
        - 2.0 * (sample_cov(a, c1) - sample_cov(b, c1))
        - 2.0 * (sample_cov(a, c2) - sample_cov(b, c2))
    )
    return VpfDifference(
        direct=var_w_i1 - var_w_p1,
        decomposed=decomposed,
        scale=max(var_w_i1, var_w_p1, var_a, var_b),
    )
