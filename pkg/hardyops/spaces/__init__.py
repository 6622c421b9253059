"""
Orthonormal bases for Beurling subspaces, model spaces and their conjugates.
"""
