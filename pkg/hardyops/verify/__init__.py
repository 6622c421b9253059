"""
Checks of the operator identities, exact membership classifiers for rational
symbols, rank studies and the seeded suites that bundle them.
"""
