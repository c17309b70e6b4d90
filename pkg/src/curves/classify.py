"""
Track and pattern classification on the boundary of a tetrahedron.
"""

from typing import List, Tuple

from ..errors import UnsupportedTriangulation
from ..models.schemas import PatternKind, TrackClassification, TrackKind
from ..patterns.coords import PatternCoords
from ..surface.triangulation import Triangulation
from .tracks import Track, extract_tracks, realize


def _opposite_pairs(tri: Triangulation) -> List[Tuple[int, int]]:
    pairs = []
    for eid, (u, v) in enumerate(tri.edges):
        rest = tuple(x for x in range(4) if x not in (u, v))
        other = tri.edge_id(*rest)
        if eid < other:
            pairs.append((eid, other))
    return pairs


def _tetrahedron_kind(tri: Triangulation, weights: PatternCoords) -> TrackKind:
    w = weights.weights
    for vertex in range(4):
        at_vertex = set(tri.vertex_edges[vertex])
        if all(w[e] == (1 if e in at_vertex else 0) for e in range(tri.edge_count)):
            return TrackKind.VERTEX_LINK
    for pair in _opposite_pairs(tri):
        rest = [w[e] for e in range(tri.edge_count) if e not in pair]
        if rest != [1, 1, 1, 1]:
            continue
        if w[pair[0]] == w[pair[1]] == 0:
            return TrackKind.QUAD
        if w[pair[0]] == w[pair[1]] == 2:
            return TrackKind.OCTAGON
    return TrackKind.OTHER


def classify_track(tri: Triangulation, t: Track) -> TrackClassification:
    """Crossing count, plus a kind tag when tri is the tetrahedron boundary."""
    kind = _tetrahedron_kind(tri, t.weights) if tri.is_tetrahedron else None
    return TrackClassification(n=t.size, kind=kind)


def pattern_kind(tri: Triangulation, p: PatternCoords) -> PatternKind:
    """Normal, almost-normal (exactly one octagon) or other; tetrahedron only."""
    if not tri.is_tetrahedron:
        raise UnsupportedTriangulation("pattern kinds are defined on the tetrahedron boundary only")
    sizes = [t.size for t in extract_tracks(realize(tri, p))]
    small = sum(1 for n in sizes if n in (3, 4))
    octagons = sizes.count(8)
    if small == len(sizes):
        return PatternKind.NORMAL
    if octagons == 1 and small == len(sizes) - 1:
        return PatternKind.ALMOST_NORMAL
    return PatternKind.OTHER
