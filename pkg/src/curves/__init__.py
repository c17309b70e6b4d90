from .classify import classify_track, pattern_kind
from .curve_system import (
    CurveSystem,
    analyze_face,
    check_embedding,
    curve_system_from_file,
    empty_system,
    make_chord,
    make_curve_system,
)
from .tracks import Track, are_parallel, extract_tracks, realize, track_weight_multiset

__all__ = [
    'CurveSystem', 'Track', 'analyze_face', 'are_parallel', 'check_embedding', 'classify_track',
    'curve_system_from_file', 'empty_system', 'extract_tracks', 'make_chord', 'make_curve_system',
    'pattern_kind', 'realize', 'track_weight_multiset',
]
