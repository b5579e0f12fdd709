"""
Oracle suite run by the selftest subcommand
"""

import math
from typing import Iterator, Optional, Tuple

import numpy as np

from vpflab.core.quantizer import dequantize, quantize
from vpflab.core.sign_map import centroid_shift
from vpflab.models.laplacian_params import LaplacianParams
from vpflab.models.quant_mode import QuantMode
from vpflab.models.quant_spec import QuantSpec
from vpflab.models.selftest_report import SelfTestReport
from vpflab.models.stat_map import SignKind
from vpflab.services.distortion_service import DistortionService
from vpflab.services.sampling import derive_seed
from vpflab.utils.logger import Logger

ORACLE_Q = (2, 8, 16, 31)
ORACLE_ALPHA = (1.0, 1.25, 2.0)
GRID_STEPS_PER_DELTA = 100
GRID_HALF_SPAN = 10

INTRA_SOURCE = LaplacianParams(0.0, 2500.0)
INTER_SOURCE = LaplacianParams(0.0, 100.0)

# Excursions past WARN_SE are reported; past FAIL_SE they fail the suite
WARN_SE = 2.5
FAIL_SE = 3.0

# (kind, q1, q2, alpha, expected sign)
HAND_SIGNS = (
    (SignKind.INTRA_CENTROID, 5, 9, 1.0, 1.0),
    (SignKind.INTRA_CENTROID, 5, 11, 1.0, -1.0),
    (SignKind.INTER_CENTROID, 10, 14, 2.0, 1.0),
    (SignKind.INTER_CENTROID, 10, 16, 2.0, -1.0),
    (SignKind.INTRA_CENTROID, 12, 12, 1.25, 0.0),
)


def _sgn(x: float) -> int:
    return (x > 0) - (x < 0)


def literal_quantize(u: float, delta: float, alpha: float) -> int:
    """Scalar transcription of the quantization rule"""
    return _sgn(u) * math.floor((abs(u) + delta * (1 - alpha / 2)) / delta)


def literal_dequantize(k: int, delta: float, mode: QuantMode) -> float:
    """Scalar transcription of both reconstruction rules"""
    if mode == QuantMode.INTRA:
        return float(_sgn(k) * math.floor(delta * abs(k)))
    return float(_sgn(k) * math.floor(delta * abs(k) + delta / 2))


class SelfTestService:
    """Quantizer brute-force equivalence, distortion-vs-Monte-Carlo and sign-map checks"""

    def __init__(
        self,
        distortion: Optional[DistortionService] = None,
        mc_count: int = 10**6,
        seed: int = 0,
        logger: Optional[Logger] = None,
    ) -> None:
        self.logger = logger or Logger("SelfTestService")
        self.distortion = distortion or DistortionService(logger=self.logger)
        self.mc_count = mc_count
        self.seed = seed

    def run(self) -> SelfTestReport:
        """Run every check"""
        report = SelfTestReport()
        self.check_quantizer(report)
        self.check_distortion(report)
        self.check_sign_maps(report)

        self.logger.info(
            "Self test finished",
            checks=report.checks_run,
            errors=report.get_error_count(),
            warnings=len(report.warnings),
        )
        return report

    def check_quantizer(self, report: SelfTestReport) -> None:
        """Compare the vectorized quantizer with the literal transcription on a fine grid"""
        for q, alpha, mode in self._grid():
            spec = QuantSpec(q=q, alpha=alpha, mode=mode)
            delta = spec.delta
            steps = np.arange(
                -GRID_HALF_SPAN * GRID_STEPS_PER_DELTA, GRID_HALF_SPAN * GRID_STEPS_PER_DELTA + 1
            )
            u = steps * delta / GRID_STEPS_PER_DELTA

            indices = quantize(u, spec)
            recon = dequantize(indices, spec)
            expected_idx = [literal_quantize(float(x), delta, alpha) for x in u]
            expected_rec = [literal_dequantize(k, delta, mode) for k in expected_idx]

            label = f"quantizer q={q} alpha={alpha} {mode}"
            report.add_check(
                f"{label} index", bool(np.array_equal(indices, expected_idx)), "index mismatch"
            )
            report.add_check(
                f"{label} reconstruction",
                bool(np.array_equal(recon, expected_rec)),
                "reconstruction mismatch",
            )

            bound = alpha * delta / 2 + 1 if mode == QuantMode.INTRA else 1.5 * delta + 1
            worst = float(np.max(np.abs(recon - u)))
            report.add_check(f"{label} bound", worst <= bound, f"error {worst} > {bound}")

    def check_distortion(self, report: SelfTestReport) -> None:
        """Compare analytic distortions with Monte Carlo estimates"""
        for q, alpha, mode in self._grid():
            spec = QuantSpec(q=q, alpha=alpha, mode=mode)
            src = INTRA_SOURCE if mode == QuantMode.INTRA else INTER_SOURCE
            analytic = self.distortion.distortion(spec, src)
            estimate, se = self.distortion.monte_carlo_distortion(
                spec, src, self.mc_count, derive_seed(self.seed, "selftest", q, alpha, mode.value)
            )
            z = abs(analytic - estimate) / se if se > 0 else 0.0

            label = f"distortion q={q} alpha={alpha} {mode}"
            detail = f"analytic {analytic:.6g} vs MC {estimate:.6g} ({z:.2f} SE)"
            report.add_check(label, z <= FAIL_SE, detail)
            if WARN_SE < z <= FAIL_SE:
                report.add_warning(f"{label}: {detail}")

    def check_sign_maps(self, report: SelfTestReport) -> None:
        """Hand-evaluated sign-map cells"""
        for kind, q1, q2, alpha, expected in HAND_SIGNS:
            value = float(np.sign(centroid_shift(kind, q1, q2, alpha, alpha)))
            report.add_check(
                f"sign {kind} ({q1},{q2}) alpha={alpha}",
                value == expected,
                f"got {value}, expected {expected}",
            )

    @staticmethod
    def _grid() -> Iterator[Tuple[int, float, QuantMode]]:
        for q in ORACLE_Q:
            for alpha in ORACLE_ALPHA:
                for mode in (QuantMode.INTRA, QuantMode.INTER):
                    yield q, alpha, mode
