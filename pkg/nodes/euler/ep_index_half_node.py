"""
Spinlat EP Half Index Node
"""

from typing import Any, Dict, List, Tuple

try:
    from ...utils.charlat import CartanDatum, VirtualCharacter
    from ...utils.epcore import ep_index_half
    from ..base import SpinlatNodeBase
except (ImportError, ValueError):
    from utils.charlat import CartanDatum, VirtualCharacter
    from utils.epcore import ep_index_half
    from nodes.base import SpinlatNodeBase


class SpinlatEpIndexHalf(SpinlatNodeBase):
    """
    EP pairing with Lambda_{-1}(p_minus) for a K-stable piece p_minus of p.

    Example:
        ep-index-half --datum sl2R.json --p-minus -2 --tau 0 --sigma 0   ->  1
    """

    COMMAND = "ep-index-half"
    FUNCTION = "index_half"
    CATEGORY = "Spinlat/Euler"

    @classmethod
    def INPUT_TYPES(cls) -> Dict[str, Any]:
        return {
            "required": {
                "datum": ("DATUM", {"help": "compact Cartan DatumFile"}),
                "p_minus": ("CHARACTER", {"help": "subcharacter of p"}),
                "tau": ("CHARACTER", {}),
                "sigma": ("CHARACTER", {}),
            },
        }

    def index_half(self, datum: CartanDatum, p_minus: VirtualCharacter, tau: VirtualCharacter,
                   sigma: VirtualCharacter) -> Tuple[List, List]:
        return [("ep_index_half", ep_index_half(datum, p_minus, tau, sigma))], []
