"""
Spinlat Selftest Node

Runs the invariant suite of every module against the bundled fixtures.
"""

import os
import sys
from typing import Any, Dict, List, Tuple

try:
    from ..config import get_data_dir, get_selftest_seed
    from ..utils.checks import run_suite
    from ..utils.validation import parse_datum
    from .base import SpinlatNodeBase, SpinlatCommandError
except (ImportError, ValueError):
    from config import get_data_dir, get_selftest_seed
    from utils.checks import run_suite
    from utils.validation import parse_datum
    from nodes.base import SpinlatNodeBase, SpinlatCommandError


FIXTURES = ("sl2R", "su2", "su3", "sp4R")


def load_fixtures() -> Dict[str, Any]:
    """Parse the bundled fixtures from the data directory."""
    data_dir = get_data_dir()
    data = {}
    for key in FIXTURES:
        path = os.path.join(data_dir, f"{key}.json")
        if not os.path.exists(path):
            raise SpinlatCommandError(f"Bundled fixture missing: {path} (check SPINLAT_DATA_DIR)")
        with open(path, "r", encoding="utf-8") as f:
            data[key] = parse_datum(f.read())
    print(f"[Spinlat] Loaded {len(data)} fixtures from {data_dir}", file=sys.stderr)
    return data


class SpinlatSelftest(SpinlatNodeBase):
    """
    Run the full invariant suite: character ring laws, Weyl characters,
    Clifford relations and the spin module, half spin identities, the
    discrete series expansions and EP indices, numeric evaluators and the
    Dirac square. Each invariant becomes one check.
    """

    COMMAND = "selftest"
    FUNCTION = "selftest"
    CATEGORY = "Spinlat/Suite"

    @classmethod
    def INPUT_TYPES(cls) -> Dict[str, Any]:
        """
        Returns:
            Dictionary containing optional input specifications:
            - seed: Seed for the random corpora (default: SPINLAT_SELFTEST_SEED)
            - quick: Use smaller corpora
        """
        return {
            "required": {},
            "optional": {
                "seed": ("INT", {"default": get_selftest_seed(), "min": 0}),
                "quick": ("BOOLEAN", {"default": False}),
            },
        }

    def selftest(self, seed: int = None, quick: bool = False) -> Tuple[List, List]:
        outcome = run_suite(load_fixtures(), seed=seed, quick=quick)
        results = [(r.name, r.cases) for r in outcome]
        checks = [(r.name, r.passed) for r in outcome]
        return results, checks
