"""
Spinlat Orientation Node
"""

from typing import Any, Dict, List, Tuple

try:
    from ...utils.charlat import CartanDatum
    from ...utils.clifford import orientation_check
    from ..base import SpinlatNodeBase
except (ImportError, ValueError):
    from utils.charlat import CartanDatum
    from utils.clifford import orientation_check
    from nodes.base import SpinlatNodeBase


class SpinlatOrientation(SpinlatNodeBase):
    """Is the top exterior power of p the trivial character of T?"""

    COMMAND = "orientation"
    FUNCTION = "orientation"
    CATEGORY = "Spinlat/Clifford"

    @classmethod
    def INPUT_TYPES(cls) -> Dict[str, Any]:
        return {
            "required": {
                "datum": ("DATUM", {"help": "compact Cartan DatumFile"}),
            },
        }

    def orientation(self, datum: CartanDatum) -> Tuple[List, List]:
        preserved = orientation_check(datum)
        return [("orientation_preserving", preserved)], [("orientation_preserving", preserved)]
