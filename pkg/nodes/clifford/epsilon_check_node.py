"""
Spinlat Epsilon Check Node
"""

from typing import Any, Dict, List, Sequence, Tuple

try:
    from ...utils.charlat import Weight
    from ...utils.clifford import epsilon_check
    from ..base import SpinlatNodeBase
except (ImportError, ValueError):
    from utils.charlat import Weight
    from utils.clifford import epsilon_check
    from nodes.base import SpinlatNodeBase


class SpinlatEpsilonCheck(SpinlatNodeBase):
    """
    Twist S+ and S- by e^epsilon, epsilon = (mu_1 + ... + mu_m)/2, and match
    them with the even and odd exterior powers of V+. The pairing is
    even-to-even for even m and flipped for odd m.
    """

    COMMAND = "epsilon-check"
    FUNCTION = "epsilon"
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

    def epsilon(self, weights: Sequence[Weight], rank: int = 1) -> Tuple[List, List]:
        report = epsilon_check(weights, rank)
        results = [
            ("even_side", report.even_side),
            ("odd_side", report.odd_side),
            ("lambda_even", report.lambda_even),
            ("lambda_odd", report.lambda_odd),
            ("flipped", report.flipped),
        ]
        return results, [("parity_matched", report.parity_matched)]
