"""
Inner functions: finite Blaschke products with optional singular atoms.
"""
