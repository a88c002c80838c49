"""
Spinlat Spin Square Node
"""

from typing import Any, Dict, List, Sequence, Tuple

try:
    from ...utils.charlat import Weight
    from ...utils.clifford import spin_square_check
    from ..base import SpinlatNodeBase
except (ImportError, ValueError):
    from utils.charlat import Weight
    from utils.clifford import spin_square_check
    from nodes.base import SpinlatNodeBase


class SpinlatSpinSquare(SpinlatNodeBase):
    """
    Compare (S+ - S-)^2 with sum_p (-1)^p Lambda^p V and report the sign
    relating them. The check passes when lhs = (-1)^m rhs.
    """

    COMMAND = "spin-square"
    FUNCTION = "spin_square"
    CATEGORY = "Spinlat/Clifford"

    @classmethod
    def INPUT_TYPES(cls) -> Dict[str, Any]:
        return {
            "required": {
                "weights": ("SPIN_WEIGHTS", {"help": "mu_1;...;mu_m, integral true coordinates"}),
            },
            "optional": {
                "rank": ("INT", {"default": 1, "min": 1}),
            },
        }

    def spin_square(self, weights: Sequence[Weight], rank: int = 1) -> Tuple[List, List]:
        report = spin_square_check(weights, rank)
        results = [
            ("lhs", report.lhs),
            ("rhs", report.rhs),
            ("sign", report.sign),
            ("equal", report.equal),
        ]
        return results, [("lhs_equals_signed_rhs", report.equal)]
