from .returning_arcs import ChordRef, find_returning_arcs, finger_move, normalize, remove_returning_arc
from .surgery import surgery, surgery_case

__all__ = [
    'ChordRef', 'find_returning_arcs', 'finger_move', 'normalize', 'remove_returning_arc',
    'surgery', 'surgery_case',
]
