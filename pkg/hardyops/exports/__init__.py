"""
Writers for the files the command-line entry points produce.
"""
