"""
Operator matrices between labeled bases, and the assembly of the operator zoo.
"""
