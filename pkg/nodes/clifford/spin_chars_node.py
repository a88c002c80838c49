"""
Spinlat Spin Characters Node

Prints the characters of the half spin modules for a list of weights.
"""

from typing import Any, Dict, List, Sequence, Tuple

try:
    from ...utils.charlat import Weight
    from ...utils.clifford import epsilon_character, half_spin_characters
    from ...utils.report import WeightValue
    from ..base import SpinlatNodeBase
except (ImportError, ValueError):
    from utils.charlat import Weight
    from utils.clifford import epsilon_character, half_spin_characters
    from utils.report import WeightValue
    from nodes.base import SpinlatNodeBase


class SpinlatSpinChars(SpinlatNodeBase):
    """
    Characters of S+ and S- for a torus acting on V with weights +-mu_i.

    Example:
        spin-chars --weights "1;1"
        S+ = e^1 + e^-1, S- = 2 e^0 (true coordinates)
    """

    COMMAND = "spin-chars"
    FUNCTION = "spin_chars"
    CATEGORY = "Spinlat/Clifford"

    @classmethod
    def INPUT_TYPES(cls) -> Dict[str, Any]:
        """
        Returns:
            Dictionary containing required and optional input specifications:
            - weights: Semicolon separated true-coordinate weights mu_1..mu_m
            - rank: Rank to use when the list is empty (default: 1)
        """
        return {
            "required": {
                "weights": ("SPIN_WEIGHTS", {"help": "mu_1;...;mu_m, integral true coordinates"}),
            },
            "optional": {
                "rank": ("INT", {"default": 1, "min": 1}),
            },
        }

    def spin_chars(self, weights: Sequence[Weight], rank: int = 1) -> Tuple[List, List]:
        plus, minus = half_spin_characters(weights, rank)
        results = [
            ("m", len(weights)),
            ("s_plus", plus),
            ("s_minus", minus),
            ("epsilon", WeightValue(epsilon_character(weights, rank))),
        ]
        expected = 2 ** (len(weights) - 1) if weights else None
        checks = []
        if expected is not None:
            checks.append(("half_dimensions", plus.dimension() == minus.dimension() == expected))
        return results, checks
