from .maximal import (
    BuilderState,
    build_maximal,
    candidate_pairs,
    extend_once,
    fits_beside,
    seed_from_pattern,
    seed_vertex_links,
)
from .oracle import certify_maximal, find_extensions, oracle_enumerate_tracks

__all__ = [
    'BuilderState', 'build_maximal', 'candidate_pairs', 'certify_maximal', 'extend_once',
    'find_extensions', 'fits_beside', 'oracle_enumerate_tracks', 'seed_from_pattern', 'seed_vertex_links',
]
