"""
Deterministic parallel sweeps over (q1, q2, alpha_i)
"""

import asyncio
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Sequence, Tuple

import numpy as np

from vpflab.core.errors import PipelineError, ValidationError, VpfLabError
from vpflab.core.event_emitter import EventEmitter
from vpflab.core.sign_map import sign_map
from vpflab.models.mb_prob_model import MBProbModel
from vpflab.models.progress_info import ProgressInfo, SweepStage
from vpflab.models.stat_map import CorrPair, SignKind, Statistic, StatMap
from vpflab.models.sweep_config import SweepConfig
from vpflab.services.distortion_service import DistortionService
from vpflab.services.pipeline_service import SynthPipelineService, vpf_difference
from vpflab.services.sampling import derive_seed
from vpflab.utils.config_helpers import resolve_worker_count
from vpflab.utils.logger import Logger
from vpflab.utils.statistics import pearson_corr, sample_var


@dataclass(frozen=True)
class SweepCell:
    """One work item of a sweep"""

    alpha_index: int
    alpha_i: float
    q1: int
    q2: Optional[int]
    seed: int

    def label(self) -> str:
        if self.q2 is None:
            return f"alpha_i={self.alpha_i} q1={self.q1}"
        return f"alpha_i={self.alpha_i} q1={self.q1} q2={self.q2}"


CellValues = Tuple[float, ...]


class SweepRunner(EventEmitter):
    """
    Tabulates pipeline statistics over the grids of a SweepConfig

    Cells run concurrently on a thread pool, bounded by a semaphore of ``workers`` slots. Each
    cell draws from a seed derived from (base_seed, operation, q1, q2, alpha index), and results
    are placed by cell index, so every grid is identical under any worker count.

    Events: ``start`` (ProgressInfo), ``progress`` (ProgressInfo after each cell), ``complete``
    (list of StatMap) and ``error`` (ProgressInfo).
    """

    def __init__(
        self,
        config: SweepConfig,
        pipeline: Optional[SynthPipelineService] = None,
        distortion: Optional[DistortionService] = None,
        mb_model: Optional[MBProbModel] = None,
        logger: Optional[Logger] = None,
    ) -> None:
        """
        Initialize sweep runner

        Args:
            config: Sweep configuration
            pipeline: Pipeline service, built from the config when omitted
            distortion: Distortion service for analytic curves
            mb_model: P-MB probability laws
            logger: Logger instance
        """
        super().__init__()
        self.config = config
        self.logger = logger or Logger("SweepRunner")
        self.mb_model = mb_model or MBProbModel()
        self.pipeline = pipeline or SynthPipelineService(
            ar=config.ar, options=config.options, mb_model=self.mb_model, logger=self.logger
        )
        self.distortion = distortion or DistortionService(logger=self.logger)
        self.workers = resolve_worker_count(config.workers)

    async def variance_curves(self) -> List[StatMap]:
        """
        Var(e_i1_n), Var(e_p1_n) and their gap versus q1, per alpha_i

        Returns:
            Three curves per alpha_i: var_e_i1, var_e_p1, var_gap
        """
        cfg = self.config

        def compute(cell: SweepCell) -> CellValues:
            errs = self.pipeline.run(cell.q1, cell.alpha_i, cfg.alpha_p, cfg.count, cell.seed)
            var_i1 = sample_var(errs.e_i1_n)
            var_p1 = sample_var(errs.e_p1_n)
            return var_i1, var_p1, var_i1 - var_p1

        cells = self._curve_cells("variance_curves")
        values = await self._run_cells("variance_curves", cells, compute)
        return await self._complete(
            self._curves(
                (Statistic.VAR_E_I1, Statistic.VAR_E_P1, Statistic.VAR_GAP), cells, values
            )
        )

    async def corr_vs_q1(self) -> List[StatMap]:
        """corr(e_i1_n, e_p1_nm1) and corr(e_p1_n, e_p1_nm1) versus q1, per alpha_i"""
        cfg = self.config

        def compute(cell: SweepCell) -> CellValues:
            errs = self.pipeline.run(cell.q1, cell.alpha_i, cfg.alpha_p, cfg.count, cell.seed)
            return (
                pearson_corr(errs.e_i1_n, errs.e_p1_nm1),
                pearson_corr(errs.e_p1_n, errs.e_p1_nm1),
            )

        cells = self._curve_cells("corr_vs_q1")
        values = await self._run_cells("corr_vs_q1", cells, compute)
        return await self._complete(
            self._curves((Statistic.CORR_I1_P1NM1, Statistic.CORR_P1_P1NM1), cells, values)
        )

    async def corr_map(self, which: CorrPair) -> List[StatMap]:
        """
        Correlation of a first-pass error at n with the second-pass error at n-1

        Args:
            which: I1_vs_P2 for e_i1_n, P1_vs_P2 for e_p1_n

        Returns:
            One (q1, q2) map per alpha_i
        """
        cfg = self.config
        which = CorrPair(which)

        def compute(cell: SweepCell) -> CellValues:
            errs = self.pipeline.run(
                cell.q1, cell.alpha_i, cfg.alpha_p, cfg.count, cell.seed, q2=cell.q2
            )
            assert errs.e_p2_nm1 is not None
            first = errs.e_i1_n if which == CorrPair.I1_VS_P2 else errs.e_p1_n
            return (pearson_corr(first, errs.e_p2_nm1),)

        statistic = Statistic.CORR_I1_P2 if which == CorrPair.I1_VS_P2 else Statistic.CORR_P1_P2
        cells = self._map_cells("corr_map")
        values = await self._run_cells(f"corr_map[{which}]", cells, compute)
        return await self._complete(self._maps(statistic, cells, values))

    async def vpf_map(self) -> List[StatMap]:
        """
        Var(W)|I1 - Var(W)|P1 over (q1, q2), per alpha_i

        The direct route is stored; the covariance expansion must agree with it in every cell.

        Raises:
            PipelineError: If the two routes disagree in a cell
        """
        cfg = self.config

        def compute(cell: SweepCell) -> CellValues:
            errs = self.pipeline.run(
                cell.q1, cell.alpha_i, cfg.alpha_p, cfg.count, cell.seed, q2=cell.q2
            )
            diff = vpf_difference(errs)
            if not diff.agrees():
                raise PipelineError(
                    f"VPF routes disagree at {cell.label()}",
                    stage="vpf_difference",
                    details={"direct": diff.direct, "decomposed": diff.decomposed},
                )
            return (diff.direct,)

        cells = self._map_cells("vpf_map")
        values = await self._run_cells("vpf_map", cells, compute)
        return await self._complete(self._maps(Statistic.VPF_DIFFERENCE, cells, values))

    def sign_map(self, kind: SignKind) -> List[StatMap]:
        """
        Closed-form sign maps

        The intra centroid depends on alpha_i, so there is one map per alpha_i. The inter centroid
        does not, and a single map is returned for the first alpha_i of the set.
        """
        cfg = self.config
        alphas = cfg.alpha_i_set if kind == SignKind.INTRA_CENTROID else cfg.alpha_i_set[:1]
        return [
            sign_map(
                kind,
                alpha_i,
                cfg.alpha_p,
                cfg.q1_range,
                cfg.q2_range,
                options=cfg.options,
                base_seed=cfg.base_seed,
            )
            for alpha_i in alphas
        ]

    async def analytic_curves(self) -> List[StatMap]:
        """Predicted Var(e_i1_n) and Var(e_p1_n) versus q1 from the distortion integrals"""
        cfg = self.config

        def compute(cell: SweepCell) -> CellValues:
            predicted = self.distortion.predict_error_variances(
                cell.q1, cell.alpha_i, cfg.alpha_p, cfg.ar, cfg.options, self.mb_model
            )
            return predicted["var_e_i1"], predicted["var_e_p1"]

        cells = self._curve_cells("analytic_curves")
        values = await self._run_cells("analytic_curves", cells, compute)
        maps = self._curves((Statistic.PRED_VAR_E_I1, Statistic.PRED_VAR_E_P1), cells, values)
        for stat_map in maps:
            stat_map.count = 0
            stat_map.cell_seeds = None
        return await self._complete(maps)

    def _curve_cells(self, operation: str) -> List[SweepCell]:
        cfg = self.config
        return [
            SweepCell(a, alpha_i, q1, None, derive_seed(cfg.base_seed, operation, q1, 0, a))
            for a, alpha_i in enumerate(cfg.alpha_i_set)
            for q1 in cfg.q1_range
        ]

    def _map_cells(self, operation: str) -> List[SweepCell]:
        cfg = self.config
        return [
            SweepCell(a, alpha_i, q1, q2, derive_seed(cfg.base_seed, operation, q1, q2, a))
            for a, alpha_i in enumerate(cfg.alpha_i_set)
            for q1 in cfg.q1_range
            for q2 in cfg.q2_range
        ]

    async def _run_cells(
        self,
        operation: str,
        cells: Sequence[SweepCell],
        compute: Callable[[SweepCell], CellValues],
    ) -> List[CellValues]:
        """Run cells concurrently and return their values in cell order"""
        total = len(cells)
        completed = 0
        loop = asyncio.get_running_loop()
        semaphore = asyncio.Semaphore(self.workers)

        self.logger.info(
            f"Starting {operation}", cells=total, workers=self.workers, count=self.config.count
        )
        start = ProgressInfo(
            stage=SweepStage.INITIALIZING,
            message=f"Starting {operation}",
            total=total,
            statistic=operation,
        )
        await self.emit("start", start)

        with ThreadPoolExecutor(max_workers=self.workers) as executor:

            async def run_with_semaphore(cell: SweepCell) -> CellValues:
                async with semaphore:
                    result = await loop.run_in_executor(executor, compute, cell)

                nonlocal completed
                completed += 1
                progress = ProgressInfo(
                    stage=SweepStage.RUNNING,
                    message=f"Running {operation}",
                    current=completed,
                    total=total,
                    statistic=operation,
                    current_cell=cell.label(),
                )
                progress.update_percentage()
                await self.emit("progress", progress)
                return result

            try:
                results = await asyncio.gather(*(run_with_semaphore(cell) for cell in cells))
            except Exception as e:
                failure = ProgressInfo(
                    stage=SweepStage.ERROR,
                    message=f"{operation} failed",
                    current=completed,
                    total=total,
                    statistic=operation,
                    error=str(e),
                )
                await self.emit("error", failure)
                self.logger.error(f"{operation} failed", error=str(e))
                if isinstance(e, VpfLabError):
                    raise
                raise PipelineError(f"{operation} failed: {e}", stage=operation) from e

        self.logger.info(f"Finished {operation}", cells=total)
        done = ProgressInfo(
            stage=SweepStage.COMPLETE,
            message=f"Completed {operation}: {total} cells",
            current=total,
            total=total,
            percentage=100.0,
            statistic=operation,
        )
        await self.emit("progress", done)
        return list(results)

    def _curves(
        self,
        statistics: Sequence[Statistic],
        cells: Sequence[SweepCell],
        values: Sequence[CellValues],
    ) -> List[StatMap]:
        cfg = self.config
        n_q1 = len(cfg.q1_range)
        maps = []
        for a, alpha_i in enumerate(cfg.alpha_i_set):
            block = slice(a * n_q1, (a + 1) * n_q1)
            seeds = np.array([cell.seed for cell in cells[block]], dtype=np.uint64)
            for s, statistic in enumerate(statistics):
                maps.append(
                    StatMap(
                        statistic=statistic,
                        q1_ticks=list(cfg.q1_range),
                        values=np.array([v[s] for v in values[block]]),
                        alpha_i=alpha_i,
                        alpha_p=cfg.alpha_p,
                        count=cfg.count,
                        base_seed=cfg.base_seed,
                        cell_seeds=seeds,
                    )
                )
        return maps

    def _maps(
        self,
        statistic: Statistic,
        cells: Sequence[SweepCell],
        values: Sequence[CellValues],
    ) -> List[StatMap]:
        cfg = self.config
        shape = (len(cfg.q1_range), len(cfg.q2_range))
        size = shape[0] * shape[1]
        maps = []
        for a, alpha_i in enumerate(cfg.alpha_i_set):
            block = slice(a * size, (a + 1) * size)
            maps.append(
                StatMap(
                    statistic=statistic,
                    q1_ticks=list(cfg.q1_range),
                    q2_ticks=list(cfg.q2_range),
                    values=np.array([v[0] for v in values[block]]).reshape(shape),
                    alpha_i=alpha_i,
                    alpha_p=cfg.alpha_p,
                    count=cfg.count,
                    base_seed=cfg.base_seed,
                    cell_seeds=np.array(
                        [cell.seed for cell in cells[block]], dtype=np.uint64
                    ).reshape(shape),
                )
            )
        return maps

    async def _complete(self, maps: List[StatMap]) -> List[StatMap]:
        await self.emit("complete", maps)
        return maps


def run_sweep(runner: SweepRunner, operation: str, **kwargs: Any) -> List[StatMap]:
    """
    Run one sweep operation to completion from synchronous code

    Raises:
        ValidationError: If the runner has no such operation
    """
    method = getattr(runner, operation, None)
    if operation.startswith("_") or not callable(method):
        raise ValidationError(f"Unknown sweep operation: {operation}", field="operation")

    async def _run() -> List[StatMap]:
        result = method(**kwargs)
        if asyncio.iscoroutine(result):
            return await result
        return result

    return asyncio.run(_run())


