"""
Realization of patterns and track extraction.
"""

from dataclasses import dataclass
from typing import List, Tuple

from ..errors import MismatchedTriangulation, NotNormal
from ..patterns.coords import PatternCoords, corner_coordinates, require_valid
from ..surface.triangulation import Triangulation
from .curve_system import Chord, Crossing, CurveSystem, make_chord, make_curve_system


@dataclass(frozen=True)
class Track:
    """One closed normal curve of a pattern."""
    crossings: Tuple[Crossing, ...]
    weights: PatternCoords

    @property
    def size(self) -> int:
        return len(self.crossings)


def _from_vertex(tri: Triangulation, vertex: int, edge: int, i: int, weight: int) -> Crossing:
    """The i-th crossing (1-based) counted from vertex along edge."""
    u, _ = tri.edges[edge]
    return (edge, i - 1) if vertex == u else (edge, weight - i)


def realize(tri: Triangulation, p: PatternCoords, check: bool = True) -> CurveSystem:
    """Canonical normal realization: arcs nested around each corner."""
    if check:
        require_valid(tri, p)
    chords: List[List[Chord]] = []
    for fid, (a, b, c) in enumerate(tri.faces):
        ab, bc, ac = tri.face_edges[fid]
        corners = corner_coordinates(tri, p, fid)
        face_chords = []
        for vertex, (e1, e2) in ((a, (ab, ac)), (b, (ab, bc)), (c, (bc, ac))):
            for i in range(1, corners.at(vertex) + 1):
                face_chords.append(make_chord(
                    _from_vertex(tri, vertex, e1, i, p[e1]),
                    _from_vertex(tri, vertex, e2, i, p[e2]),
                ))
        chords.append(face_chords)
    return make_curve_system(tri, p.weights, chords, check=check)


def extract_tracks(cs: CurveSystem) -> List[Track]:
    """Split a normal system into its closed curves, each with its own weight vector."""
    if not cs.is_normal:
        raise NotNormal(f"{len(cs.returning_chords)} returning arc(s) present; normalize first")
    return [Track(curve, cs.curve_weights(i)) for i, curve in enumerate(cs.curves)]


def are_parallel(t1: Track, t2: Track) -> bool:
    if not t1.weights.same_triangulation(t2.weights):
        raise MismatchedTriangulation("tracks live on different triangulations")
    return t1.weights.weights == t2.weights.weights


def track_weight_multiset(cs: CurveSystem) -> List[Tuple[int, ...]]:
    """Sorted weight vectors of the tracks of a normal system."""
    return sorted(t.weights.weights for t in extract_tracks(cs))
