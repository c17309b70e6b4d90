"""
Surgery at two adjacent crossings of an edge.
"""

from typing import List, Tuple

from ..errors import NoAdjacentPair, NotNormal
from ..models.schemas import SurgeryCase
from ..curves.curve_system import Chord, CurveSystem, make_chord, make_curve_system
from .returning_arcs import shift_edge


def _merge(cs: CurveSystem, edge: int, pos: int) -> Tuple[CurveSystem, bool, List[Chord]]:
    if not cs.is_normal:
        raise NotNormal("surgery needs a normal curve system")
    if pos < 0 or pos + 1 >= cs.counts[edge]:
        raise NoAdjacentPair(
            f"edge {cs.triangulation.edge_label(edge)} has no crossings at {pos} and {pos + 1}"
        )
    tri = cs.triangulation
    a, b = (edge, pos), (edge, pos + 1)
    same_track = cs.curve_of[a] == cs.curve_of[b]

    chords = [list(face_chords) for face_chords in cs.chords]
    merged = []
    for fid in tri.edge_faces[edge]:
        a_far, b_far = cs.partners[fid][a], cs.partners[fid][b]
        chords[fid].remove(make_chord(a, a_far))
        chords[fid].remove(make_chord(b, b_far))
        chords[fid].append(make_chord(a_far, b_far))
        merged.append(make_chord(a_far, b_far))

    for fid in tri.edge_faces[edge]:
        chords[fid] = [(shift_edge(x, edge, pos + 2, -2), shift_edge(y, edge, pos + 2, -2)) for x, y in chords[fid]]
    counts = list(cs.counts)
    counts[edge] -= 2
    return make_curve_system(tri, counts, chords), same_track, merged


def surgery(cs: CurveSystem, edge: int, pos: int) -> Tuple[CurveSystem, bool]:
    """Cut at crossings pos and pos+1 of edge and rejoin parallel to the edge.

    Returns the new system and whether both crossings were on one curve
    (which then splits in two; otherwise two curves merge into one).
    """
    result, same_track, _ = _merge(cs, edge, pos)
    return result, same_track


def surgery_case(cs: CurveSystem, edge: int, pos: int) -> SurgeryCase:
    """How many of the two rejoined chords are returning arcs: a = none, b = one, c = two."""
    _, _, merged = _merge(cs, edge, pos)
    returning = sum(1 for x, y in merged if x[0] == y[0])
    return (SurgeryCase.A, SurgeryCase.B, SurgeryCase.C)[returning]
