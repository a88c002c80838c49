"""
Spinlat Spinoriality Node
"""

from typing import Any, Dict, List, Tuple

try:
    from ...utils.charlat import CartanDatum
    from ...utils.clifford import spinoriality_check
    from ...utils.report import WeightValue
    from ..base import SpinlatNodeBase
except (ImportError, ValueError):
    from utils.charlat import CartanDatum
    from utils.clifford import spinoriality_check
    from utils.report import WeightValue
    from nodes.base import SpinlatNodeBase


class SpinlatSpinoriality(SpinlatNodeBase):
    """Does K -> SO(p) lift to Spin(p) on the compact Cartan?"""

    COMMAND = "spinoriality"
    FUNCTION = "spinoriality"
    CATEGORY = "Spinlat/Clifford"

    @classmethod
    def INPUT_TYPES(cls) -> Dict[str, Any]:
        return {
            "required": {
                "datum": ("DATUM", {"help": "compact Cartan DatumFile"}),
            },
        }

    def spinoriality(self, datum: CartanDatum) -> Tuple[List, List]:
        report = spinoriality_check(datum)
        return [("lifts", report.lifts), ("epsilon", WeightValue(report.epsilon))], []
