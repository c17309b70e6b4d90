"""
Embedded curve systems on a triangulated sphere.
Crossings are (edge, position) pairs with positions counted from the smaller
vertex of the edge and re-indexed after every rewrite. Each face carries a
list of chords; a chord with both ends on one edge is a returning arc.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import NotEmbedded
from ..models.schemas import CrossingRef, CurveSystemFile, TriangulationFile
from ..patterns.coords import PatternCoords
from ..surface.triangulation import Triangulation, build_triangulation

Crossing = Tuple[int, int]
Chord = Tuple[Crossing, Crossing]
Segment = Tuple[int, int]


def make_chord(a: Crossing, b: Crossing) -> Chord:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class FaceLayout:
    """How the chords of one face cut it into pieces.

    Local piece 0 is the piece containing the face's smallest vertex; a new
    piece id is issued each time the boundary walk opens a chord.
    """
    face: int
    piece_count: int
    segment_piece: Dict[Segment, int]
    vertex_piece: Dict[int, int]
    chord_sides: Dict[Chord, Tuple[int, int]]
    boundary: Tuple[Crossing, ...]


@dataclass(frozen=True)
class CurveSystem:
    """Crossing counts per edge plus the chords of each face."""
    triangulation: Triangulation
    counts: Tuple[int, ...]
    chords: Tuple[Tuple[Chord, ...], ...]

    @property
    def total_crossings(self) -> int:
        return sum(self.counts)

    @property
    def is_empty(self) -> bool:
        return self.total_crossings == 0

    @cached_property
    def partners(self) -> Tuple[Dict[Crossing, Crossing], ...]:
        """Per face, the other end of the chord at each crossing."""
        maps = []
        for face_chords in self.chords:
            partner: Dict[Crossing, Crossing] = {}
            for a, b in face_chords:
                partner[a] = b
                partner[b] = a
            maps.append(partner)
        return tuple(maps)

    @cached_property
    def returning_chords(self) -> Tuple[Tuple[int, Chord], ...]:
        return tuple(
            (fid, chord) for fid, face_chords in enumerate(self.chords)
            for chord in face_chords if chord[0][0] == chord[1][0]
        )

    @property
    def is_normal(self) -> bool:
        return not self.returning_chords

    def crossings(self) -> List[Crossing]:
        return [(e, k) for e, n in enumerate(self.counts) for k in range(n)]

    @cached_property
    def curves(self) -> Tuple[Tuple[Crossing, ...], ...]:
        """Closed curves as cyclic crossing sequences, in order of their lowest crossing.

        Each curve starts at its lowest crossing and leaves it through the
        first face listed for that crossing's edge.
        """
        tri = self.triangulation
        visited = set()
        result = []
        for start in self.crossings():
            if start in visited:
                continue
            curve = [start]
            visited.add(start)
            face = tri.edge_faces[start[0]][0]
            current = start
            while True:
                nxt = self.partners[face][current]
                if nxt == start:
                    break
                curve.append(nxt)
                visited.add(nxt)
                face = tri.other_face(nxt[0], face)
                current = nxt
            result.append(tuple(curve))
        return tuple(result)

    @cached_property
    def curve_of(self) -> Dict[Crossing, int]:
        return {c: i for i, curve in enumerate(self.curves) for c in curve}

    def weights(self) -> PatternCoords:
        return PatternCoords(self.triangulation.edges, self.counts)

    def curve_weights(self, index: int) -> PatternCoords:
        weights = [0] * self.triangulation.edge_count
        for edge, _ in self.curves[index]:
            weights[edge] += 1
        return PatternCoords(self.triangulation.edges, tuple(weights))

    def layout(self, face: int) -> FaceLayout:
        return self.layouts[face]

    @cached_property
    def layouts(self) -> Tuple[FaceLayout, ...]:
        return tuple(analyze_face(self, fid) for fid in range(self.triangulation.face_count))

    def to_file(self, include_triangulation: bool = True) -> CurveSystemFile:
        tri = self.triangulation
        curves = [
            [CrossingRef(edge=tri.edge_label(e), pos=k) for e, k in curve] for curve in self.curves
        ]
        embedded = None
        if include_triangulation:
            embedded = TriangulationFile(vertices=tri.vertex_count, faces=[list(f) for f in tri.faces])
        return CurveSystemFile(triangulation=embedded, curves=curves)


def _boundary_tokens(cs: CurveSystem, face: int) -> List[Tuple[str, int, int]]:
    """Cyclic boundary walk A, AB ascending, B, BC ascending, C, AC descending."""
    tri = cs.triangulation
    a, b, c = tri.faces[face]
    ab, bc, ac = tri.face_edges[face]
    tokens: List[Tuple[str, int, int]] = [('v', a, 0)]
    tokens += [('x', ab, k) for k in range(cs.counts[ab])]
    tokens.append(('v', b, 0))
    tokens += [('x', bc, k) for k in range(cs.counts[bc])]
    tokens.append(('v', c, 0))
    tokens += [('x', ac, k) for k in reversed(range(cs.counts[ac]))]
    return tokens


def analyze_face(cs: CurveSystem, face: int) -> FaceLayout:
    """Walk the face boundary with a chord stack; raises NotEmbedded if chords cross."""
    tri = cs.triangulation
    a, b, c = tri.faces[face]
    ab, bc, ac = tri.face_edges[face]
    partner = cs.partners[face]

    tokens = _boundary_tokens(cs, face)
    stack: List[Tuple[Chord, int]] = []
    seen = set()
    current, next_piece = 0, 1
    segment_piece: Dict[Segment, int] = {}
    vertex_piece: Dict[int, int] = {}
    chord_sides: Dict[Chord, Tuple[int, int]] = {}
    boundary: List[Crossing] = []

    for kind, ident, pos in tokens:
        if kind == 'v':
            vertex_piece[ident] = current
            gap = (ab, 0) if ident == a else (bc, 0) if ident == b else (ac, cs.counts[ac])
        else:
            crossing = (ident, pos)
            boundary.append(crossing)
            other = partner.get(crossing)
            if other is None:
                raise NotEmbedded(f"crossing {crossing} has no chord in face {face}")
            chord = make_chord(crossing, other)
            if other not in seen:
                stack.append((chord, current))
                chord_sides[chord] = (current, next_piece)
                current = next_piece
                next_piece += 1
            else:
                if not stack or stack[-1][0] != chord:
                    raise NotEmbedded(f"chords cross in face {face}")
                current = stack.pop()[1]
            seen.add(crossing)
            gap = (ident, pos) if ident == ac else (ident, pos + 1)
        segment_piece[gap] = current

    if stack:
        raise NotEmbedded(f"unclosed chord in face {face}")
    return FaceLayout(face, next_piece, segment_piece, vertex_piece, chord_sides, tuple(boundary))


def check_embedding(cs: CurveSystem) -> None:
    """Every crossing has one chord per face of its edge and chords never cross."""
    tri = cs.triangulation
    if len(cs.counts) != tri.edge_count or len(cs.chords) != tri.face_count:
        raise NotEmbedded("curve system does not match its triangulation")
    for fid, face_chords in enumerate(cs.chords):
        face_edges = set(tri.face_edges[fid])
        ends = [x for chord in face_chords for x in chord]
        if len(ends) != len(set(ends)):
            raise NotEmbedded(f"a crossing carries two chords in face {fid}")
        for edge, pos in ends:
            if edge not in face_edges or not 0 <= pos < cs.counts[edge]:
                raise NotEmbedded(f"chord end {(edge, pos)} is not on the boundary of face {fid}")
        expected = sum(cs.counts[e] for e in face_edges)
        if len(ends) != expected:
            raise NotEmbedded(f"face {fid} has {len(ends)} chord ends for {expected} crossings")
        analyze_face(cs, fid)


def make_curve_system(tri: Triangulation, counts: Sequence[int],
                      chords: Sequence[Iterable[Chord]], check: bool = True) -> CurveSystem:
    cs = CurveSystem(
        triangulation=tri,
        counts=tuple(counts),
        chords=tuple(tuple(sorted(make_chord(*ch) for ch in face_chords)) for face_chords in chords),
    )
    if check:
        check_embedding(cs)
    return cs


def empty_system(tri: Triangulation) -> CurveSystem:
    return make_curve_system(tri, [0] * tri.edge_count, [[] for _ in range(tri.face_count)], check=False)


def _chord_faces(tri: Triangulation, curve: List[Crossing]) -> List[int]:
    """Face of each chord (c_i, c_i+1); same-edge chords alternate with their neighbours."""
    m = len(curve)
    fixed: List[Optional[int]] = [None] * m
    for i in range(m):
        e1, e2 = curve[i][0], curve[(i + 1) % m][0]
        if e1 != e2:
            common = set(tri.edge_faces[e1]) & set(tri.edge_faces[e2])
            if len(common) != 1:
                raise NotEmbedded(f"crossings on edges {tri.edge_label(e1)} and {tri.edge_label(e2)} share no face")
            fixed[i] = common.pop()

    anchor = next((i for i in range(m) if fixed[i] is not None), None)
    faces: List[Optional[int]] = [None] * m
    if anchor is None:
        anchor = 0
        faces[0] = tri.edge_faces[curve[0][0]][0]
    else:
        faces[anchor] = fixed[anchor]
    for step in range(1, m + 1):
        i = (anchor + step) % m
        shared_edge = curve[i][0]
        if faces[(i - 1) % m] not in tri.edge_faces[shared_edge]:
            raise NotEmbedded("consecutive chords do not meet at a common edge")
        expected = tri.other_face(shared_edge, faces[(i - 1) % m])
        if step == m:
            if expected != faces[anchor]:
                raise NotEmbedded("curve does not alternate faces consistently")
            break
        if fixed[i] is not None and fixed[i] != expected:
            raise NotEmbedded("curve does not alternate faces consistently")
        faces[i] = expected
    return faces


def curve_system_from_file(data: CurveSystemFile, tri: Optional[Triangulation] = None) -> CurveSystem:
    """Load a curve file; validates two chords per crossing and non-crossing chords."""
    if tri is None:
        if data.triangulation is None:
            raise NotEmbedded("curve file has no triangulation and none was supplied")
        tri = build_triangulation(data.triangulation.faces, data.triangulation.vertices)

    positions: Dict[int, List[int]] = {}
    chords: List[List[Chord]] = [[] for _ in range(tri.face_count)]
    for raw in data.curves:
        curve = [(tri.parse_edge(ref.edge), ref.pos) for ref in raw]
        if len(curve) < 2:
            raise NotEmbedded("a curve needs at least two crossings")
        for edge, pos in curve:
            positions.setdefault(edge, []).append(pos)
        for i, fid in enumerate(_chord_faces(tri, curve)):
            chords[fid].append(make_chord(curve[i], curve[(i + 1) % len(curve)]))

    counts = [0] * tri.edge_count
    for edge, used in positions.items():
        if sorted(used) != list(range(len(used))):
            raise NotEmbedded(f"positions on edge {tri.edge_label(edge)} must be 0..{len(used) - 1}, each once")
        counts[edge] = len(used)
    return make_curve_system(tri, counts, chords)
