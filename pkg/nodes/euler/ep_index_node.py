"""
Spinlat EP Index Node

Computes the Euler-Poincare pairing sum_p (-1)^p dim(sigma (x) Lambda^p p (x) dual(tau))^K.
"""

from typing import Any, Dict, List, Tuple

try:
    from ...utils.charlat import CartanDatum, VirtualCharacter, vc_constant_term, vc_dual, vc_lambda_alternating
    from ...utils.epcore import ep_index
    from ..base import SpinlatNodeBase
except (ImportError, ValueError):
    from utils.charlat import CartanDatum, VirtualCharacter, vc_constant_term, vc_dual, vc_lambda_alternating
    from utils.epcore import ep_index
    from nodes.base import SpinlatNodeBase


class SpinlatEpIndex(SpinlatNodeBase):
    """
    Euler-Poincare index of (tau, sigma) on a compact Cartan datum.

    For a torus K the K-invariant contraction is a constant term; that
    shortcut is reported as a check against the full contraction.

    Example:
        ep-index --datum sl2R.json --tau 0 --sigma 0   ->  2
    """

    COMMAND = "ep-index"
    FUNCTION = "index"
    CATEGORY = "Spinlat/Euler"

    @classmethod
    def INPUT_TYPES(cls) -> Dict[str, Any]:
        """
        Returns:
            Dictionary containing required input specifications:
            - datum: Compact Cartan DatumFile
            - tau: K-type character, "coords[:mult];..."
            - sigma: K-type character of the representation paired against
        """
        return {
            "required": {
                "datum": ("DATUM", {"help": "compact Cartan DatumFile"}),
                "tau": ("CHARACTER", {"help": "coords[:mult];... (true coordinates)"}),
                "sigma": ("CHARACTER", {"help": "coords[:mult];... (true coordinates)"}),
            },
        }

    def index(self, datum: CartanDatum, tau: VirtualCharacter, sigma: VirtualCharacter) -> Tuple[List, List]:
        value = ep_index(datum, tau, sigma)
        checks = []
        if datum.weyl_order == 1:
            shortcut = vc_constant_term(sigma * vc_lambda_alternating(datum.p_char) * vc_dual(tau))
            checks.append(("torus_constant_term_agrees", shortcut == value))
        return [("ep_index", value)], checks
