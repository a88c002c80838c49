"""
Spinlat Orbital General Node
"""

from typing import Any, Dict, List, Tuple

try:
    from ...utils.charlat import CartanDatum
    from ...utils.epcore import orbital_general_formula
    from ..base import SpinlatNodeBase
except (ImportError, ValueError):
    from utils.charlat import CartanDatum
    from utils.epcore import orbital_general_formula
    from nodes.base import SpinlatNodeBase


class SpinlatOrbitalGeneral(SpinlatNodeBase):
    """
    Closed form of the orbital integral at a nonregular elliptic element,
    tr tau(g) |W| prod B(rho_g, alpha) / c_g, from supplied centralizer data.

    The centralizer datum provides rho_g, its positive roots and B; |W| and
    c_g are passed separately.
    """

    COMMAND = "orbital-general"
    FUNCTION = "general"
    CATEGORY = "Spinlat/Orbital"

    @classmethod
    def INPUT_TYPES(cls) -> Dict[str, Any]:
        return {
            "required": {
                "tau_value": ("COMPLEX", {"help": "tr tau(g) as re,im"}),
                "c_g": ("FLOAT", {"help": "Harish-Chandra constant of the centralizer"}),
                "w_order": ("INT", {"min": 1}),
                "centralizer": ("DATUM", {"help": "DatumFile of the centralizer G_g"}),
            },
        }

    def general(self, tau_value: complex, c_g: float, w_order: int, centralizer: CartanDatum) -> Tuple[List, List]:
        value = orbital_general_formula(tau_value, c_g, w_order, centralizer.rho,
                                        centralizer.positive_roots, centralizer.gram)
        return [("orbital_integral", value)], []
