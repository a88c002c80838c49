"""
Euler-Poincare commands: EP and pseudo-coefficient indices, Weyl
denominators, discrete series expansions, Casimir shifts, the
Harish-Chandra constant and the Dirac square
"""
