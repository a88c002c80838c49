"""
Spinlat Validate Node

Loads a DatumFile, reports the derived root data and checks that it
round-trips through serialization.
"""

from typing import Any, Dict, List, Tuple

try:
    from ..utils.charlat import CartanDatum, vc_dual
    from ..utils.clifford import orientation_check
    from ..utils.report import WeightValue
    from ..utils.validation import parse_datum, serialize_datum
    from .base import SpinlatNodeBase
except (ImportError, ValueError):
    from utils.charlat import CartanDatum, vc_dual
    from utils.clifford import orientation_check
    from utils.report import WeightValue
    from utils.validation import parse_datum, serialize_datum
    from nodes.base import SpinlatNodeBase


class SpinlatValidate(SpinlatNodeBase):
    """
    Validate a Cartan datum file and echo its derived data.

    Results list the rank, |W|, rho, rho_K, rho_n and the K-character of p.
    Checks confirm p is self-dual, the datum survives a serialize/parse
    round trip and (for compact Cartan data) that T preserves orientation.
    """

    COMMAND = "validate"
    FUNCTION = "validate"
    CATEGORY = "Spinlat/Lattice"

    @classmethod
    def INPUT_TYPES(cls) -> Dict[str, Any]:
        return {
            "required": {
                "datum": ("DATUM", {"help": "DatumFile JSON (path or bundled name)"}),
            },
        }

    def validate(self, datum: CartanDatum) -> Tuple[List, List]:
        text = serialize_datum(datum)
        again = parse_datum(text)
        results = [
            ("name", datum.name),
            ("rank", datum.rank),
            ("positive_roots", len(datum.positive_roots)),
            ("compact_roots", len(datum.compact_roots)),
            ("noncompact_roots", len(datum.noncompact_roots)),
            ("weyl_order", datum.weyl_order),
            ("rho", WeightValue(datum.rho)),
            ("rho_k", WeightValue(datum.rho_k)),
            ("rho_n", WeightValue(datum.rho_n)),
            ("p_char", datum.p_char),
        ]
        checks = [
            ("p_self_dual", vc_dual(datum.p_char) == datum.p_char),
            ("round_trip", serialize_datum(again) == text and again.weyl_order == datum.weyl_order),
        ]
        if datum.is_all_imaginary():
            checks.append(("orientation_preserving", orientation_check(datum)))
        return results, checks
