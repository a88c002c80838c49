"""
Spinlat Pseudo Orbital Node
"""

from typing import Any, Dict, List, Tuple

try:
    from ...utils.charlat import CartanDatum, TorusPoint, VirtualCharacter, vc_evaluate
    from ...utils.epcore import pseudo_orbital, spin_characters_of
    from ..base import SpinlatNodeBase
except (ImportError, ValueError):
    from utils.charlat import CartanDatum, TorusPoint, VirtualCharacter, vc_evaluate
    from utils.epcore import pseudo_orbital, spin_characters_of
    from nodes.base import SpinlatNodeBase


class SpinlatPseudoOrbital(SpinlatNodeBase):
    """Orbital integral of the pseudo-coefficient, tr tau(t) / tr(t | S+ - S-)."""

    COMMAND = "pseudo-orbital"
    FUNCTION = "pseudo_orbital"
    CATEGORY = "Spinlat/Orbital"

    @classmethod
    def INPUT_TYPES(cls) -> Dict[str, Any]:
        return {
            "required": {
                "datum": ("DATUM", {"help": "compact Cartan DatumFile"}),
                "tau": ("CHARACTER", {}),
                "angles": ("ANGLES", {}),
            },
        }

    def pseudo_orbital(self, datum: CartanDatum, tau: VirtualCharacter, angles: TorusPoint) -> Tuple[List, List]:
        value = pseudo_orbital(datum, tau, angles)
        spin = vc_evaluate(spin_characters_of(datum), angles)
        trace = vc_evaluate(tau, angles)
        consistent = abs(value * spin - trace) <= 1e-9 * max(1.0, abs(trace))
        return [("orbital_integral", value), ("spin_trace", spin)], [("ratio_consistent", consistent)]
