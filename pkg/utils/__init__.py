"""
Library modules for spinlat

charlat (weights, virtual characters, Weyl groups), clifford (Clifford
algebra and the spin module), epcore (Euler-Poincare indices, discrete series
and orbital integrals), plus input validation, reports and the selftest suite.
"""

__all__ = []
