"""
Probability that a macroblock is coded as P-MB
"""

from typing import Optional

from vpflab.models.mb_prob_model import MBProbModel
from vpflab.utils.validation import validate_q


def p_pmb_first(q1: int, model: Optional[MBProbModel] = None) -> float:
    """
    P-MB probability of the first compression, 0.15 + 0.7*exp(-9*q1/31)

    Raises:
        ValidationError: If q1 is out of range
    """
    model = model or MBProbModel()
    return model.first_law(validate_q(q1, "q1"))


def p_pmb_second(q1: int, q2: int, model: Optional[MBProbModel] = None) -> float:
    """
    P-MB probability of the second compression

    Residues of a recompressed sequence sit closer to zero, so the first-pass probability decays
    further with q2: 0.15 + (p1 - 0.15)*exp(-9*q2/31).

    Raises:
        ValidationError: If q1 or q2 is out of range
    """
    model = model or MBProbModel()
    p1 = p_pmb_first(q1, model)
    return model.second_law(p1, validate_q(q2, "q2"))
