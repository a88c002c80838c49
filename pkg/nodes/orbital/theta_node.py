"""
Spinlat Theta Node
"""

from typing import Any, Dict, List, Tuple

try:
    from ...utils.charlat import CartanDatum, TorusPoint, Weight, vc_evaluate
    from ...utils.epcore import RegularCharacter, delta_characters, theta_evaluate
    from ..base import SpinlatNodeBase
except (ImportError, ValueError):
    from utils.charlat import CartanDatum, TorusPoint, Weight, vc_evaluate
    from utils.epcore import RegularCharacter, delta_characters, theta_evaluate
    from nodes.base import SpinlatNodeBase


class SpinlatTheta(SpinlatNodeBase):
    """
    Value of the discrete series character Theta_t at a regular point of
    the compact Cartan, N_t(theta) / Delta(theta).
    """

    COMMAND = "theta"
    FUNCTION = "theta"
    CATEGORY = "Spinlat/Orbital"

    @classmethod
    def INPUT_TYPES(cls) -> Dict[str, Any]:
        return {
            "required": {
                "datum": ("DATUM", {"help": "compact Cartan DatumFile"}),
                "that": ("WEIGHT", {"help": "regular parameter (true coordinates)"}),
                "angles": ("ANGLES", {"help": "theta_1,...,theta_rank in radians"}),
            },
        }

    def theta(self, datum: CartanDatum, that: Weight, angles: TorusPoint) -> Tuple[List, List]:
        param = RegularCharacter(that, datum)
        value = theta_evaluate(datum, param, angles)
        numerator = vc_evaluate(param.numerator, angles)
        denominator = vc_evaluate(delta_characters(datum).delta_full, angles)
        consistent = abs(value * denominator - numerator) <= 1e-9 * max(1.0, abs(numerator))
        return [("theta", value), ("numerator", param.numerator)], [("numerator_consistent", consistent)]
