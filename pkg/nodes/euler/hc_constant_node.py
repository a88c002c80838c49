"""
Spinlat Harish-Chandra Constant Node
"""

from typing import Any, Dict, List, Tuple

try:
    from ...utils.epcore import HcInputs, hc_constant
    from ..base import SpinlatNodeBase, SpinlatValidationError
except (ImportError, ValueError):
    from utils.epcore import HcInputs, hc_constant
    from nodes.base import SpinlatNodeBase, SpinlatValidationError


class SpinlatHcConstant(SpinlatNodeBase):
    """
    c_G = (-1)^{|noncompact|} (2 pi)^{|positive|} 2^{nu/2} (v(T)/v(K)) |W|.

    The volume ratio is an input; nothing here measures volumes.
    """

    COMMAND = "hc-constant"
    FUNCTION = "constant"
    CATEGORY = "Spinlat/Euler"

    @classmethod
    def INPUT_TYPES(cls) -> Dict[str, Any]:
        return {
            "required": {
                "n_pos_roots": ("INT", {"min": 0}),
                "n_noncompact": ("INT", {"min": 0}),
                "nu": ("INT", {"min": 0, "help": "dim G/K - real rank"}),
                "weyl_order": ("INT", {"min": 1}),
            },
            "optional": {
                "vol_ratio": ("FLOAT", {"default": 1.0, "help": "v(T)/v(K)"}),
            },
        }

    def constant(self, n_pos_roots: int, n_noncompact: int, nu: int, weyl_order: int,
                 vol_ratio: float = 1.0) -> Tuple[List, List]:
        if n_noncompact > n_pos_roots:
            raise SpinlatValidationError("n_noncompact cannot exceed n_pos_roots")
        value = hc_constant(HcInputs(n_pos_roots, n_noncompact, nu, weyl_order, vol_ratio))
        sign = -1 if n_noncompact % 2 else 1
        return [("hc_constant", value)], [("sign_rule", (value > 0) == (sign > 0))]
