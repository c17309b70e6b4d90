"""
Analyzer package for tracklab.
Corpus-scale runs of the maximal builder and dual-tree checks.
"""

from .corpus_runner import CorpusRunner, TrialPlan, run_trial

__all__ = ['CorpusRunner', 'TrialPlan', 'run_trial']
