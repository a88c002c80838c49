"""
Spinlat Discrete Expand Node

Expands tau (x) Delta over discrete series numerators on the compact Cartan.
"""

from typing import Any, Dict, List, Tuple

try:
    from ...utils.charlat import CartanDatum, VirtualCharacter
    from ...utils.epcore import delta_characters, discrete_expansion, is_regular
    from ..base import SpinlatNodeBase
except (ImportError, ValueError):
    from utils.charlat import CartanDatum, VirtualCharacter
    from utils.epcore import delta_characters, discrete_expansion, is_regular
    from nodes.base import SpinlatNodeBase


class SpinlatDiscreteExpand(SpinlatNodeBase):
    """
    Coefficients of tau (x) Delta on the numerators N_t, keyed by orbit
    representative, plus the remainder on singular weights.

    Example:
        discrete-expand --datum sl2R.json --tau 3
        coeffs {3: 1, 1: -1}, remainder empty
    """

    COMMAND = "discrete-expand"
    FUNCTION = "expand"
    CATEGORY = "Spinlat/Euler"

    @classmethod
    def INPUT_TYPES(cls) -> Dict[str, Any]:
        return {
            "required": {
                "datum": ("DATUM", {"help": "compact Cartan DatumFile"}),
                "tau": ("CHARACTER", {"help": "W(K,T)-invariant character, coords[:mult];... (true coordinates)"}),
            },
        }

    def expand(self, datum: CartanDatum, tau: VirtualCharacter) -> Tuple[List, List]:
        expansion = discrete_expansion(datum, tau)
        target = tau * delta_characters(datum).delta_full
        results = [
            ("coeffs", expansion.coeffs),
            ("remainder", expansion.remainder),
        ]
        checks = [
            ("reconstruction", expansion.reconstruct(datum) == target),
            ("remainder_singular", all(not is_regular(datum, w) for w in expansion.remainder.support())),
        ]
        return results, checks
