"""
Spinlat Delta Plus Node

Split Cartan factors: Delta_+(at) and the normalization h^{rho_P} det(1 - h^{-1} | (g/h)^+).
"""

from typing import Any, Dict, List, Optional, Sequence, Tuple

try:
    from ...utils.charlat import TorusPoint
    from ...utils.epcore import SplitCartanDatum, delta_plus_evaluate, normalized_orbital_factor
    from ..base import SpinlatNodeBase
except (ImportError, ValueError):
    from utils.charlat import TorusPoint
    from utils.epcore import SplitCartanDatum, delta_plus_evaluate, normalized_orbital_factor
    from nodes.base import SpinlatNodeBase


class SpinlatDeltaPlus(SpinlatNodeBase):
    """
    Example:
        delta-plus --split-datum sl2R_split.json --a 1
        delta_plus = 2|sinh 1|, normalized_factor = 2 sinh 1
    """

    COMMAND = "delta-plus"
    FUNCTION = "delta_plus"
    CATEGORY = "Spinlat/Orbital"

    @classmethod
    def INPUT_TYPES(cls) -> Dict[str, Any]:
        return {
            "required": {
                "split_datum": ("SPLIT_DATUM", {"help": "split Cartan JSON"}),
                "a": ("REALS", {"help": "coordinates of log a"}),
            },
            "optional": {
                "angles": ("ANGLES", {"help": "point of the compact factor T"}),
            },
        }

    def delta_plus(self, split_datum: SplitCartanDatum, a: Sequence[float],
                   angles: Optional[TorusPoint] = None) -> Tuple[List, List]:
        value = delta_plus_evaluate(split_datum, a, angles)
        factor = normalized_orbital_factor(split_datum, a, angles)
        checks = []
        if split_datum.imaginary_part is None:
            checks.append(("modulus_matches", abs(abs(factor) - value) <= 1e-9 * max(1.0, value)))
        return [("delta_plus", value), ("normalized_factor", factor)], checks
