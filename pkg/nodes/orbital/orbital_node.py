"""
Spinlat Orbital Node

Orbital integral of the Euler-Poincare function at a regular elliptic element.
"""

from typing import Any, Dict, List, Optional, Tuple

try:
    from ...utils.charlat import CartanDatum, TorusPoint, VirtualCharacter, Weight
    from ...utils.epcore import k_type_character, orbital_regular
    from ..base import SpinlatNodeBase, SpinlatUsageError
except (ImportError, ValueError):
    from utils.charlat import CartanDatum, TorusPoint, VirtualCharacter, Weight
    from utils.epcore import k_type_character, orbital_regular
    from nodes.base import SpinlatNodeBase, SpinlatUsageError


class SpinlatOrbital(SpinlatNodeBase):
    """
    O_t(f_tau) = tr tau(t) at regular elliptic t.

    tau is given either as a character or by the highest weight of an
    irreducible K-module; exactly one of the two is required.
    """

    COMMAND = "orbital"
    FUNCTION = "orbital"
    CATEGORY = "Spinlat/Orbital"

    @classmethod
    def INPUT_TYPES(cls) -> Dict[str, Any]:
        return {
            "required": {
                "datum": ("DATUM", {}),
                "angles": ("ANGLES", {}),
            },
            "optional": {
                "tau": ("CHARACTER", {}),
                "tau_highest": ("WEIGHT", {"help": "highest weight of an irreducible K-module"}),
            },
        }

    def orbital(self, datum: CartanDatum, angles: TorusPoint, tau: Optional[VirtualCharacter] = None,
                tau_highest: Optional[Weight] = None) -> Tuple[List, List]:
        if (tau is None) == (tau_highest is None):
            raise SpinlatUsageError("Give exactly one of --tau and --tau-highest")
        if tau is None:
            tau = k_type_character(datum, tau_highest)
        return [("orbital_integral", orbital_regular(datum, tau, angles)), ("tau", tau)], []
