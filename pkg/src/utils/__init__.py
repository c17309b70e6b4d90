"""
Utilities package for tracklab.
"""
