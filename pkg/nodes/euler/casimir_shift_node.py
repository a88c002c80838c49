"""
Spinlat Casimir Shift Node
"""

from typing import Any, Dict, List, Tuple

try:
    from ...utils.charlat import CartanDatum, Weight
    from ...utils.epcore import casimir_shift
    from ..base import SpinlatNodeBase
except (ImportError, ValueError):
    from utils.charlat import CartanDatum, Weight
    from utils.epcore import casimir_shift
    from nodes.base import SpinlatNodeBase


class SpinlatCasimirShift(SpinlatNodeBase):
    """
    The value the Casimir of G must take on any pi that pairs with tau
    through the half spin modules.
    """

    COMMAND = "casimir-shift"
    FUNCTION = "shift"
    CATEGORY = "Spinlat/Euler"

    @classmethod
    def INPUT_TYPES(cls) -> Dict[str, Any]:
        return {
            "required": {
                "datum": ("DATUM", {}),
                "tau_highest": ("WEIGHT", {"help": "highest weight of tau (true coordinates)"}),
            },
        }

    def shift(self, datum: CartanDatum, tau_highest: Weight) -> Tuple[List, List]:
        return [("casimir_shift", casimir_shift(datum, tau_highest))], []
