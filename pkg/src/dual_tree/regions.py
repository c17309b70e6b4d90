"""
Complementary regions of a normal curve system.
Each face is cut by its chords into pieces; pieces sharing an edge segment
belong to the same region.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

import networkx as nx

from ..curves.curve_system import CurveSystem, Segment
from ..curves.tracks import Track, extract_tracks
from ..errors import MismatchedTriangulation, NotATree, NotNormal, UnknownRegion
from ..models.schemas import RegionProfile
from ..surface.triangulation import Triangulation

Piece = Tuple[int, int]


@dataclass(frozen=True)
class Region:
    index: int
    pieces: Tuple[Piece, ...]
    vertices: Tuple[int, ...]
    segment_count: int
    tracks: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.tracks)

    @property
    def euler_char(self) -> int:
        """Closed region: boundary circles add as many crossings as chords."""
        return len(self.vertices) + len(self.pieces) - self.segment_count


@dataclass(frozen=True)
class RegionDecomposition:
    curve_system: CurveSystem
    tracks: Tuple[Track, ...]
    regions: Tuple[Region, ...]
    track_regions: Tuple[Tuple[int, int], ...]
    segment_region: Dict[Segment, int]
    vertex_region: Tuple[int, ...]

    @property
    def triangulation(self) -> Triangulation:
        return self.curve_system.triangulation

    def region(self, index: int) -> Region:
        if not 0 <= index < len(self.regions):
            raise UnknownRegion(f"region {index} not in 0..{len(self.regions) - 1}")
        return self.regions[index]


def decompose(tri: Triangulation, cs: CurveSystem) -> RegionDecomposition:
    """Flood-fill face pieces across edge segments into regions."""
    if cs.triangulation != tri:
        raise MismatchedTriangulation("curve system was built on a different triangulation")
    if not cs.is_normal:
        raise NotNormal("regions are only defined for normal curve systems")
    tracks = tuple(extract_tracks(cs))
    layouts = cs.layouts

    graph = nx.Graph()
    for layout in layouts:
        graph.add_nodes_from((layout.face, local) for local in range(layout.piece_count))
    for eid in range(tri.edge_count):
        f1, f2 = tri.edge_faces[eid]
        for s in range(cs.counts[eid] + 1):
            graph.add_edge((f1, layouts[f1].segment_piece[(eid, s)]), (f2, layouts[f2].segment_piece[(eid, s)]))

    components = sorted((sorted(comp) for comp in nx.connected_components(graph)), key=lambda c: c[0])
    piece_region: Dict[Piece, int] = {piece: i for i, comp in enumerate(components) for piece in comp}

    segment_region: Dict[Segment, int] = {}
    for eid in range(tri.edge_count):
        f1 = tri.edge_faces[eid][0]
        for s in range(cs.counts[eid] + 1):
            segment_region[(eid, s)] = piece_region[(f1, layouts[f1].segment_piece[(eid, s)])]

    vertex_region = tuple(
        piece_region[(tri.vertex_faces[x][0], layouts[tri.vertex_faces[x][0]].vertex_piece[x])]
        for x in range(tri.vertex_count)
    )

    sides: List[set] = [set() for _ in tracks]
    for layout in layouts:
        for chord, (outer, inner) in layout.chord_sides.items():
            track = cs.curve_of[chord[0]]
            sides[track].add(frozenset((piece_region[(layout.face, outer)], piece_region[(layout.face, inner)])))
    track_regions = []
    for index, found in enumerate(sides):
        pair = next(iter(found))
        if len(found) != 1 or len(pair) != 2:
            raise NotATree(f"track {index} does not separate two regions")
        track_regions.append(tuple(sorted(pair)))

    segments_in = [0] * len(components)
    for region in segment_region.values():
        segments_in[region] += 1
    vertices_in: List[List[int]] = [[] for _ in components]
    for x, region in enumerate(vertex_region):
        vertices_in[region].append(x)
    tracks_at: List[List[int]] = [[] for _ in components]
    for index, (r1, r2) in enumerate(track_regions):
        tracks_at[r1].append(index)
        tracks_at[r2].append(index)

    regions = tuple(
        Region(i, tuple(comp), tuple(vertices_in[i]), segments_in[i], tuple(tracks_at[i]))
        for i, comp in enumerate(components)
    )
    return RegionDecomposition(cs, tracks, regions, tuple(track_regions), segment_region, vertex_region)


def region_profile(rd: RegionDecomposition, region: int) -> RegionProfile:
    r = rd.region(region)
    return RegionProfile(
        region=r.index,
        degree=r.degree,
        interior_vertices=len(r.vertices),
        euler_char=r.euler_char,
        vertices=list(r.vertices),
    )


def is_leaf_profile(profile: RegionProfile) -> bool:
    """A disc around one vertex."""
    return (profile.degree, profile.interior_vertices, profile.euler_char) == (1, 1, 1)


def is_pants_profile(profile: RegionProfile) -> bool:
    return (profile.degree, profile.interior_vertices, profile.euler_char) == (3, 0, -1)
