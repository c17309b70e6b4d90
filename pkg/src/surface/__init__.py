"""
Surface package for tracklab.
Simplicial 2-sphere triangulations and their generators.
"""

from .triangulation import Triangulation, build_triangulation
from .generators import GeneratorSpec, generate

__all__ = ['Triangulation', 'build_triangulation', 'GeneratorSpec', 'generate']
