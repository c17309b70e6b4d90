"""
Pattern coordinates package for tracklab.
"""

from .coords import (
    CornerTriple, PatternCoords, corner_coordinates, sum_patterns, validate_pattern, vertex_link, zero_pattern,
)

__all__ = [
    'CornerTriple', 'PatternCoords', 'corner_coordinates', 'sum_patterns', 'validate_pattern',
    'vertex_link', 'zero_pattern',
]
