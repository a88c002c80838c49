"""
Spinlat Dirac Check Node

Builds the Dirac operator of an irreducible sl(2)-module on V (x) S and
compares its square with the Parthasarathy formula.
"""

from typing import Any, Dict, List, Tuple

try:
    from ...utils.clifford import PolarizedSpace
    from ...utils.epcore import dirac_square_check, sl2_dirac_model
    from ..base import SpinlatNodeBase
except (ImportError, ValueError):
    from utils.clifford import PolarizedSpace
    from utils.epcore import dirac_square_check, sl2_dirac_model
    from nodes.base import SpinlatNodeBase


class SpinlatDiracCheck(SpinlatNodeBase):
    """
    Exact defect of D^2 against Omega_K(diag) - pi(C) - B(rho) + B(rho_K)
    on both half spin blocks. Passes when the defect is zero.
    """

    COMMAND = "dirac-check"
    FUNCTION = "dirac"
    CATEGORY = "Spinlat/Euler"

    @classmethod
    def INPUT_TYPES(cls) -> Dict[str, Any]:
        """
        Returns:
            Dictionary containing required input specifications:
            - n: Dimension of the irreducible sl(2)-module (1 = trivial)
        """
        return {
            "required": {
                "n": ("INT", {"default": 2, "min": 1, "max": 64}),
            },
        }

    def dirac(self, n: int) -> Tuple[List, List]:
        report = dirac_square_check(sl2_dirac_model(n), PolarizedSpace(1))
        results = [
            ("dimension", report.dimension),
            ("max_defect", report.max_defect),
            ("defect_plus", report.blocks["plus"]),
            ("defect_minus", report.blocks["minus"]),
        ]
        return results, [("dirac_square", report.max_defect == 0)]
