"""
Spinlat Pseudo Index Node

Pseudo-coefficient pairing dim(sigma (x) S+ (x) dual(tau))^K - dim(sigma (x) S- (x) dual(tau))^K.
"""

from typing import Any, Dict, List, Tuple

try:
    from ...utils.charlat import CartanDatum, VirtualCharacter
    from ...utils.epcore import ep_via_pseudo_check, pseudo_index
    from ..base import SpinlatNodeBase
except (ImportError, ValueError):
    from utils.charlat import CartanDatum, VirtualCharacter
    from utils.epcore import ep_via_pseudo_check, pseudo_index
    from nodes.base import SpinlatNodeBase


class SpinlatPseudoIndex(SpinlatNodeBase):
    """
    Pseudo-coefficient index of (tau, sigma), with the check that replacing
    tau by (S+ - S-) (x) tau recovers the EP index.
    """

    COMMAND = "pseudo-index"
    FUNCTION = "pseudo"
    CATEGORY = "Spinlat/Euler"

    @classmethod
    def INPUT_TYPES(cls) -> Dict[str, Any]:
        return {
            "required": {
                "datum": ("DATUM", {"help": "compact Cartan DatumFile"}),
                "tau": ("CHARACTER", {}),
                "sigma": ("CHARACTER", {}),
            },
        }

    def pseudo(self, datum: CartanDatum, tau: VirtualCharacter, sigma: VirtualCharacter) -> Tuple[List, List]:
        value = pseudo_index(datum, tau, sigma)
        check = ep_via_pseudo_check(datum, tau, sigma)
        results = [
            ("pseudo_index", value),
            ("ep_index", check.ep),
            ("ep_via_pseudo", check.pseudo),
            ("sign", check.sign),
        ]
        return results, [("ep_recovered", check.equal)]
