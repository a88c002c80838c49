"""
Spinlat Delta Node
"""

from typing import Any, Dict, List, Tuple

try:
    from ...utils.charlat import CartanDatum
    from ...utils.epcore import delta_characters, gamma_identity_check
    from ..base import SpinlatNodeBase
except (ImportError, ValueError):
    from utils.charlat import CartanDatum
    from utils.epcore import delta_characters, gamma_identity_check
    from nodes.base import SpinlatNodeBase


class SpinlatDelta(SpinlatNodeBase):
    """
    Weyl denominators over compact, noncompact and all positive roots, and
    the identity Lambda_{-1}(p) = delta_n (x) dual(delta_n).
    """

    COMMAND = "delta"
    FUNCTION = "delta"
    CATEGORY = "Spinlat/Euler"

    @classmethod
    def INPUT_TYPES(cls) -> Dict[str, Any]:
        return {
            "required": {
                "datum": ("DATUM", {"help": "compact Cartan DatumFile"}),
            },
        }

    def delta(self, datum: CartanDatum) -> Tuple[List, List]:
        deltas = delta_characters(datum)
        gamma = gamma_identity_check(datum)
        results = [
            ("delta_c", deltas.delta_c),
            ("delta_n", deltas.delta_n),
            ("delta_full", deltas.delta_full),
        ]
        checks = [
            ("delta_full_factorizes", deltas.delta_full == deltas.delta_c * deltas.delta_n),
            ("lambda_p_identity", gamma.equal),
        ]
        return results, checks
