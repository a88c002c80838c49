"""
Clifford commands: half spin characters, the spin square, the epsilon twist,
spinoriality and orientation
"""
