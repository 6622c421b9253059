"""
Coefficient-level arithmetic for boundary functions on the unit circle.
"""
