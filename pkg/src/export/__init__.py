"""
Export package for tracklab.
DOT output for D_P and JSON/YAML report writing.
"""

from .dot_exporter import generate_dot
from .report_exporter import ReportExporter

__all__ = ['ReportExporter', 'generate_dot']
