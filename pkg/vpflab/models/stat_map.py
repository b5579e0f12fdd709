"""
Labeled grids of sweep statistics
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from vpflab.core.errors import ValidationError


class CorrPair(str, Enum):
    """Error pairs of the second-compression correlation maps"""

    I1_VS_P2 = "I1_vs_P2"
    P1_VS_P2 = "P1_vs_P2"

    def __str__(self) -> str:
        return self.value


class SignKind(str, Enum):
    """Centroid whose requantization a sign map evaluates"""

    INTRA_CENTROID = "intra_centroid"
    INTER_CENTROID = "inter_centroid"

    def __str__(self) -> str:
        return self.value


class Statistic(str, Enum):
    """Statistics a sweep can tabulate"""

    VAR_E_I1 = "var_e_i1"
    VAR_E_P1 = "var_e_p1"
    VAR_GAP = "var_gap"
    CORR_I1_P1NM1 = "corr_e_i1_e_p1nm1"
    CORR_P1_P1NM1 = "corr_e_p1_e_p1nm1"
    CORR_I1_P2 = "corr_e_i1_e_p2nm1"
    CORR_P1_P2 = "corr_e_p1_e_p2nm1"
    VPF_DIFFERENCE = "vpf_difference"
    SIGN_INTRA = "sign_intra_centroid"
    SIGN_INTER = "sign_inter_centroid"
    PRED_VAR_E_I1 = "pred_var_e_i1"
    PRED_VAR_E_P1 = "pred_var_e_p1"

    def __str__(self) -> str:
        return self.value

    @property
    def is_correlation(self) -> bool:
        """Values are correlations in [-1, 1]"""
        return self.value.startswith("corr_")

    @property
    def is_sign(self) -> bool:
        """Values are signs in {-1, 0, 1}"""
        return self.value.startswith("sign_")


Cell = Tuple[int, Optional[int], float, Optional[int]]


@dataclass(eq=False)
class StatMap:
    """
    A statistic tabulated over q1 (curves) or over (q1, q2) (maps)

    ``values`` has shape ``(len(q1_ticks),)`` for curves and
    ``(len(q1_ticks), len(q2_ticks))`` for maps. ``cell_seeds`` holds the derived seed of every
    sampled cell.
    """

    statistic: Statistic
    q1_ticks: List[int]
    values: np.ndarray
    q2_ticks: Optional[List[int]] = None
    alpha_i: float = 2.0
    alpha_p: float = 2.0
    count: int = 0
    base_seed: int = 0
    cell_seeds: Optional[np.ndarray] = None

    def __post_init__(self) -> None:
        """Validate grid dimensions and statistic ranges"""
        self.values = np.asarray(self.values, dtype=float)

        expected = (
            (len(self.q1_ticks),)
            if self.q2_ticks is None
            else (len(self.q1_ticks), len(self.q2_ticks))
        )
        if self.values.shape != expected:
            raise ValidationError(
                f"Value grid shape {self.values.shape} does not match axes {expected}",
                field="values",
            )

        if self.cell_seeds is not None and np.shape(self.cell_seeds) != expected:
            raise ValidationError("Seed grid shape does not match axes", field="cell_seeds")

        if self.statistic.is_correlation and np.any(np.abs(self.values) > 1.0):
            raise ValidationError(
                "Correlation values must lie in [-1, 1]", field="values", value=str(self.statistic)
            )

        if self.statistic.is_sign and not np.all(np.isin(self.values, (-1.0, 0.0, 1.0))):
            raise ValidationError(
                "Sign values must lie in {-1, 0, 1}", field="values", value=str(self.statistic)
            )

    @property
    def is_curve(self) -> bool:
        """Tabulated over q1 only"""
        return self.q2_ticks is None

    def value_at(self, q1: int, q2: Optional[int] = None) -> float:
        """Value of one cell"""
        row = self.q1_ticks.index(q1)
        if self.q2_ticks is None:
            return float(self.values[row])
        if q2 is None:
            raise ValidationError("q2 is required for a (q1, q2) map", field="q2")
        return float(self.values[row, self.q2_ticks.index(q2)])

    def cells(self) -> Iterator[Cell]:
        """Iterate over (q1, q2, value, seed) in row-major order"""
        for i, q1 in enumerate(self.q1_ticks):
            if self.q2_ticks is None:
                yield q1, None, float(self.values[i]), self._seed_at((i,))
                continue
            for j, q2 in enumerate(self.q2_ticks):
                yield q1, q2, float(self.values[i, j]), self._seed_at((i, j))

    def region_mean(self, predicate: Callable[[int, int], bool]) -> float:
        """
        Mean of the map over the cells selected by predicate(q1, q2)

        Raises:
            ValidationError: If the map is a curve or the region is empty
        """
        if self.q2_ticks is None:
            raise ValidationError("Region means need a (q1, q2) map", field="q2_ticks")

        selected = [
            self.values[i, j]
            for i, q1 in enumerate(self.q1_ticks)
            for j, q2 in enumerate(self.q2_ticks)
            if predicate(q1, q2)
        ]
        if not selected:
            raise ValidationError("Region selects no cells", field="predicate")
        return float(np.mean(selected))

    def _seed_at(self, index: Tuple[int, ...]) -> Optional[int]:
        if self.cell_seeds is None:
            return None
        return int(self.cell_seeds[index])

    def __repr__(self) -> str:
        return (
            f"StatMap(statistic={self.statistic}, alpha_i={self.alpha_i}, "
            f"alpha_p={self.alpha_p}, shape={self.values.shape})"
        )


def select_map(maps: Sequence[StatMap], statistic: Statistic, alpha_i: float) -> StatMap:
    """
    Pick one map out of a sweep result

    Raises:
        ValidationError: If no map matches
    """
    for stat_map in maps:
        if stat_map.statistic == statistic and stat_map.alpha_i == alpha_i:
            return stat_map
    raise ValidationError(
        f"No {statistic} map for alpha_i={alpha_i}", field="statistic", value=str(statistic)
    )
