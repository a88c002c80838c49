"""
Orbital integral commands: discrete series characters, elliptic orbital
integrals, Weyl factors and split Cartan normalizations
"""
