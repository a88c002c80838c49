"""
Spinlat Weyl Factor Node
"""

from typing import Any, Dict, List, Tuple

try:
    from ...utils.charlat import CartanDatum, TorusPoint
    from ...utils.epcore import weyl_det_factor
    from ..base import SpinlatNodeBase
except (ImportError, ValueError):
    from utils.charlat import CartanDatum, TorusPoint
    from utils.epcore import weyl_det_factor
    from nodes.base import SpinlatNodeBase


class SpinlatWeylFactor(SpinlatNodeBase):
    """|det(1 - Ad(t) | g/t)| at a torus point (zero when t is singular)."""

    COMMAND = "weyl-factor"
    FUNCTION = "factor"
    CATEGORY = "Spinlat/Orbital"

    @classmethod
    def INPUT_TYPES(cls) -> Dict[str, Any]:
        return {
            "required": {
                "datum": ("DATUM", {}),
                "angles": ("ANGLES", {}),
            },
        }

    def factor(self, datum: CartanDatum, angles: TorusPoint) -> Tuple[List, List]:
        return [("weyl_factor", weyl_det_factor(datum, angles))], []
