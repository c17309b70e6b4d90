"""
Returning arcs: detection, removal, normalization and the inverse finger move.
Positions on the rewritten edge are re-indexed after every step.
"""

import random
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from ..errors import NotEmbedded, NotInnermost, NotReturning
from ..models.schemas import RewriteReport
from ..utils.logger import get_logger
from ..curves.curve_system import (
    Chord,
    Crossing,
    CurveSystem,
    analyze_face,
    check_embedding,
    make_chord,
    make_curve_system,
)

logger = get_logger(__name__)


@dataclass(frozen=True)
class ChordRef:
    """A chord of one face; for returning arcs, innermost means its ends are adjacent on the edge."""
    face: int
    chord: Chord
    innermost: bool = False

    @property
    def edge(self) -> int:
        return self.chord[0][0]

    def sort_key(self) -> Tuple[int, int, int]:
        return (self.edge, self.chord[0][1], self.face)


def shift_edge(crossing: Crossing, edge: int, start: int, delta: int) -> Crossing:
    """Move crossings on edge at position >= start by delta."""
    e, pos = crossing
    if e == edge and pos >= start:
        return (e, pos + delta)
    return crossing


def find_returning_arcs(cs: CurveSystem) -> List[ChordRef]:
    arcs = [
        ChordRef(face, chord, abs(chord[0][1] - chord[1][1]) == 1)
        for face, chord in cs.returning_chords
    ]
    return sorted(arcs, key=ChordRef.sort_key)


def _resolve(cs: CurveSystem, ref: Union[ChordRef, Tuple[int, Chord]]) -> ChordRef:
    face, chord = (ref.face, ref.chord) if isinstance(ref, ChordRef) else ref
    chord = make_chord(*chord)
    if chord not in cs.chords[face]:
        raise NotReturning(f"face {face} has no chord {chord}")
    if chord[0][0] != chord[1][0]:
        raise NotReturning(f"chord {chord} joins two different edges")
    if chord[1][1] - chord[0][1] != 1:
        raise NotInnermost(f"chord {chord} encloses other crossings of its edge")
    return ChordRef(face, chord, True)


def _remove(cs: CurveSystem, ref: ChordRef, check: bool) -> Tuple[CurveSystem, bool]:
    tri = cs.triangulation
    edge = ref.edge
    p, q = ref.chord
    other = tri.other_face(edge, ref.face)
    p_far = cs.partners[other][p]
    q_far = cs.partners[other][q]
    annihilated = p_far == q

    chords = [list(face_chords) for face_chords in cs.chords]
    chords[ref.face].remove(ref.chord)
    if annihilated:
        chords[other].remove(ref.chord)
    else:
        chords[other].remove(make_chord(p, p_far))
        chords[other].remove(make_chord(q, q_far))
        chords[other].append(make_chord(p_far, q_far))

    start = q[1] + 1
    for fid in tri.edge_faces[edge]:
        chords[fid] = [
            (shift_edge(a, edge, start, -2), shift_edge(b, edge, start, -2)) for a, b in chords[fid]
        ]
    counts = list(cs.counts)
    counts[edge] -= 2
    return make_curve_system(tri, counts, chords, check=check), annihilated


def remove_returning_arc(cs: CurveSystem, chord: Union[ChordRef, Tuple[int, Chord]]) -> CurveSystem:
    """Delete an innermost returning arc and its two crossings, rejoining the far chords."""
    result, _ = _remove(cs, _resolve(cs, chord), check=True)
    return result


def normalize(cs: CurveSystem, rng: Optional[random.Random] = None) -> Tuple[CurveSystem, RewriteReport]:
    """Remove innermost returning arcs until none remain.

    The default order is lexicographic by (edge, position, face); with rng,
    each step picks uniformly among the innermost arcs.
    """
    steps = annihilated = 0
    current = cs
    while True:
        candidates = [arc for arc in find_returning_arcs(current) if arc.innermost]
        if not candidates:
            break
        arc = rng.choice(candidates) if rng is not None else candidates[0]
        current, gone = _remove(current, arc, check=False)
        steps += 1
        annihilated += int(gone)

    report = RewriteReport(
        steps=steps,
        crossings_removed=2 * steps,
        annihilated_curves=annihilated,
        final_normal=current.is_normal,
    )
    logger.log_normalize(steps, annihilated)
    return current, report


def finger_move(cs: CurveSystem, face: int, chord: Chord, edge: int, segment: int) -> CurveSystem:
    """Push a chord of face across one of its edges at the given edge segment.

    Inserts two adjacent crossings on the edge and an innermost returning arc
    in the neighbouring face; remove_returning_arc undoes it.
    """
    tri = cs.triangulation
    chord = make_chord(*chord)
    if chord not in cs.chords[face]:
        raise NotEmbedded(f"face {face} has no chord {chord}")
    if edge not in tri.face_edges[face]:
        raise NotEmbedded(f"edge {tri.edge_label(edge)} is not a side of face {face}")
    if not 0 <= segment <= cs.counts[edge]:
        raise NotEmbedded(f"edge {tri.edge_label(edge)} has no segment {segment}")

    other = tri.other_face(edge, face)
    p, q = (edge, segment), (edge, segment + 1)
    x, y = (shift_edge(end, edge, segment, 2) for end in chord)
    counts = list(cs.counts)
    counts[edge] += 2

    base = [list(face_chords) for face_chords in cs.chords]
    base[face].remove(chord)
    for fid in tri.edge_faces[edge]:
        base[fid] = [(shift_edge(a, edge, segment, 2), shift_edge(b, edge, segment, 2)) for a, b in base[fid]]
    base[other].append((p, q))

    for left, right in ((p, q), (q, p)):
        chords = [list(face_chords) for face_chords in base]
        chords[face] += [(x, left), (right, y)]
        candidate = make_curve_system(tri, counts, chords, check=False)
        try:
            analyze_face(candidate, face)
        except NotEmbedded:
            continue
        check_embedding(candidate)
        return candidate
    raise NotEmbedded(f"chord {chord} cannot reach segment {segment} of edge {tri.edge_label(edge)}")
