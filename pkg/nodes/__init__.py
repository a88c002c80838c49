"""
Spinlat commands

Every CLI subcommand is a node class. Imports use graceful fallback so one
broken command does not take the registry down with it.
"""

import sys

__all__ = []


def _log(message: str) -> None:
    print(f"[Spinlat nodes] {message}", file=sys.stderr)


# ============================================================================
# Lattice and suite
# ============================================================================

try:
    from .validate_node import SpinlatValidate
    __all__.append("SpinlatValidate")
except ImportError as e:
    _log(f"✗ Failed to import SpinlatValidate: {e}")

try:
    from .selftest_node import SpinlatSelftest
    __all__.append("SpinlatSelftest")
except ImportError as e:
    _log(f"✗ Failed to import SpinlatSelftest: {e}")

# ============================================================================
# Clifford
# ============================================================================

try:
    from .clifford.spin_chars_node import SpinlatSpinChars
    __all__.append("SpinlatSpinChars")
except ImportError as e:
    _log(f"✗ SpinlatSpinChars failed: {e}")

try:
    from .clifford.spin_square_node import SpinlatSpinSquare
    __all__.append("SpinlatSpinSquare")
except ImportError as e:
    _log(f"✗ SpinlatSpinSquare failed: {e}")

try:
    from .clifford.epsilon_check_node import SpinlatEpsilonCheck
    __all__.append("SpinlatEpsilonCheck")
except ImportError as e:
    _log(f"✗ SpinlatEpsilonCheck failed: {e}")

try:
    from .clifford.spinoriality_node import SpinlatSpinoriality
    __all__.append("SpinlatSpinoriality")
except ImportError as e:
    _log(f"✗ SpinlatSpinoriality failed: {e}")

try:
    from .clifford.orientation_node import SpinlatOrientation
    __all__.append("SpinlatOrientation")
except ImportError as e:
    _log(f"✗ SpinlatOrientation failed: {e}")

# ============================================================================
# Euler-Poincare
# ============================================================================

try:
    from .euler.ep_index_node import SpinlatEpIndex
    __all__.append("SpinlatEpIndex")
except ImportError as e:
    _log(f"✗ SpinlatEpIndex failed: {e}")

try:
    from .euler.ep_index_half_node import SpinlatEpIndexHalf
    __all__.append("SpinlatEpIndexHalf")
except ImportError as e:
    _log(f"✗ SpinlatEpIndexHalf failed: {e}")

try:
    from .euler.pseudo_index_node import SpinlatPseudoIndex
    __all__.append("SpinlatPseudoIndex")
except ImportError as e:
    _log(f"✗ SpinlatPseudoIndex failed: {e}")

try:
    from .euler.delta_node import SpinlatDelta
    __all__.append("SpinlatDelta")
except ImportError as e:
    _log(f"✗ SpinlatDelta failed: {e}")

try:
    from .euler.discrete_expand_node import SpinlatDiscreteExpand
    __all__.append("SpinlatDiscreteExpand")
except ImportError as e:
    _log(f"✗ SpinlatDiscreteExpand failed: {e}")

try:
    from .euler.casimir_shift_node import SpinlatCasimirShift
    __all__.append("SpinlatCasimirShift")
except ImportError as e:
    _log(f"✗ SpinlatCasimirShift failed: {e}")

try:
    from .euler.hc_constant_node import SpinlatHcConstant
    __all__.append("SpinlatHcConstant")
except ImportError as e:
    _log(f"✗ SpinlatHcConstant failed: {e}")

try:
    from .euler.dirac_check_node import SpinlatDiracCheck
    __all__.append("SpinlatDiracCheck")
except ImportError as e:
    _log(f"✗ SpinlatDiracCheck failed: {e}")

# ============================================================================
# Orbital integrals
# ============================================================================

try:
    from .orbital.theta_node import SpinlatTheta
    __all__.append("SpinlatTheta")
except ImportError as e:
    _log(f"✗ SpinlatTheta failed: {e}")

try:
    from .orbital.orbital_node import SpinlatOrbital
    __all__.append("SpinlatOrbital")
except ImportError as e:
    _log(f"✗ SpinlatOrbital failed: {e}")

try:
    from .orbital.orbital_general_node import SpinlatOrbitalGeneral
    __all__.append("SpinlatOrbitalGeneral")
except ImportError as e:
    _log(f"✗ SpinlatOrbitalGeneral failed: {e}")

try:
    from .orbital.pseudo_orbital_node import SpinlatPseudoOrbital
    __all__.append("SpinlatPseudoOrbital")
except ImportError as e:
    _log(f"✗ SpinlatPseudoOrbital failed: {e}")

try:
    from .orbital.weyl_factor_node import SpinlatWeylFactor
    __all__.append("SpinlatWeylFactor")
except ImportError as e:
    _log(f"✗ SpinlatWeylFactor failed: {e}")

try:
    from .orbital.delta_plus_node import SpinlatDeltaPlus
    __all__.append("SpinlatDeltaPlus")
except ImportError as e:
    _log(f"✗ SpinlatDeltaPlus failed: {e}")


# ============================================================================
# Registry
# ============================================================================

# class name -> display name, in help order
_NODE_DEFINITIONS = {
    "SpinlatValidate": "Validate Datum",
    "SpinlatSpinChars": "Half Spin Characters",
    "SpinlatSpinSquare": "Spin Square",
    "SpinlatEpsilonCheck": "Epsilon Twist",
    "SpinlatSpinoriality": "Spinoriality",
    "SpinlatOrientation": "Orientation",
    "SpinlatEpIndex": "EP Index",
    "SpinlatEpIndexHalf": "EP Half Index",
    "SpinlatPseudoIndex": "Pseudo-coefficient Index",
    "SpinlatDelta": "Weyl Denominators",
    "SpinlatDiscreteExpand": "Discrete Series Expansion",
    "SpinlatTheta": "Discrete Series Character",
    "SpinlatOrbital": "Regular Orbital Integral",
    "SpinlatOrbitalGeneral": "General Orbital Formula",
    "SpinlatPseudoOrbital": "Pseudo-coefficient Orbital Integral",
    "SpinlatCasimirShift": "Casimir Shift",
    "SpinlatHcConstant": "Harish-Chandra Constant",
    "SpinlatWeylFactor": "Weyl Factor",
    "SpinlatDeltaPlus": "Split Cartan Factors",
    "SpinlatDiracCheck": "Dirac Square",
    "SpinlatSelftest": "Selftest",
}

# command name -> class
NODE_CLASS_MAPPINGS = {}
NODE_DISPLAY_NAME_MAPPINGS = {}

for _class_name, _display_name in _NODE_DEFINITIONS.items():
    _node_class = globals().get(_class_name)
    if _node_class is not None:
        NODE_CLASS_MAPPINGS[_node_class.COMMAND] = _node_class
        NODE_DISPLAY_NAME_MAPPINGS[_node_class.COMMAND] = _display_name

if len(NODE_CLASS_MAPPINGS) < len(_NODE_DEFINITIONS):
    _log(f"Registered {len(NODE_CLASS_MAPPINGS)} of {len(_NODE_DEFINITIONS)} commands")

__all__ += ["NODE_CLASS_MAPPINGS", "NODE_DISPLAY_NAME_MAPPINGS"]
