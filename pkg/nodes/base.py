"""
Base classes and exceptions for spinlat command nodes
"""

from abc import ABC, abstractmethod
from typing import Dict, Any


class SpinlatNodeBase(ABC):
    """
    Base class for all spinlat command nodes.

    Every command of the CLI is a node: it declares its inputs through
    INPUT_TYPES, names its entry point in FUNCTION and returns a
    ``(results, checks)`` tuple, where results is a list of ``(name, value)``
    pairs and checks a list of ``(name, passed)`` pairs.

    Attributes:
        COMMAND: Subcommand name on the command line (e.g. "ep-index")
        CATEGORY: The category under which the command is listed.
                  Subclasses should set specific categories like:
                  - "Spinlat/Lattice" for datum validation
                  - "Spinlat/Clifford" for spin module and half-spin checks
                  - "Spinlat/Euler" for Euler-Poincare and discrete series data
                  - "Spinlat/Orbital" for orbital integral evaluators
                  - "Spinlat/Suite" for the invariant suite
    """

    RETURN_TYPES = ("RESULTS", "CHECKS")
    RETURN_NAMES = ("results", "checks")

    # No default COMMAND or CATEGORY - subclasses must define their own

    @classmethod
    @abstractmethod
    def INPUT_TYPES(cls) -> Dict[str, Any]:
        """
        Define input parameters for the node.

        This method must be implemented by all subclasses. Each input is
        ``name: (SLOT_TYPE, options)`` where SLOT_TYPE is one of DATUM,
        SPLIT_DATUM, WEIGHT, SPIN_WEIGHTS, CHARACTER, ANGLES, REALS, COMPLEX,
        INT, FLOAT or BOOLEAN, or a list of choices.

        Returns:
            Dictionary containing 'required' and/or 'optional' input specifications
        """
        pass


class SpinlatException(Exception):
    """Base exception for all spinlat command errors"""
    pass


class SpinlatValidationError(SpinlatException):
    """Command input validation failed"""
    pass


class SpinlatUsageError(SpinlatException):
    """Command invoked with an unusable combination of inputs"""
    pass


class SpinlatCommandError(SpinlatException):
    """A library call inside a command failed"""
    pass
