"""
The dual tree D_P: one vertex per region, one edge per track.
"""

from dataclasses import dataclass
from typing import List, Union

import networkx as nx

from ..curves.tracks import realize
from ..errors import NotATree, UnknownEdge
from ..models.schemas import EdgePathReport
from ..patterns.coords import PatternCoords
from ..surface.triangulation import Triangulation
from .regions import RegionDecomposition, decompose, region_profile


@dataclass(frozen=True)
class DualTree:
    graph: nx.MultiGraph
    decomposition: RegionDecomposition

    @property
    def v_p(self) -> int:
        return self.graph.number_of_nodes()

    @property
    def e_p(self) -> int:
        return self.graph.number_of_edges()

    def degree(self, region: int) -> int:
        return self.graph.degree(region)

    def degrees(self) -> List[int]:
        return sorted(d for _, d in self.graph.degree())

    def leaves(self) -> List[int]:
        return [n for n, d in self.graph.degree() if d == 1]


def dual_tree(rd: RegionDecomposition) -> DualTree:
    """Regions as nodes (with profiles), tracks as keyed edges; must be a tree."""
    graph = nx.MultiGraph()
    for region in rd.regions:
        graph.add_node(region.index, profile=region_profile(rd, region.index))
    for index, (r1, r2) in enumerate(rd.track_regions):
        graph.add_edge(r1, r2, key=index, n=rd.tracks[index].size)
    if not nx.is_connected(graph) or graph.number_of_edges() != graph.number_of_nodes() - 1:
        raise NotATree(
            f"D_P has {graph.number_of_nodes()} vertices and {graph.number_of_edges()} edges"
        )
    return DualTree(graph, rd)


def edge_walk(rd: RegionDecomposition, edge: int) -> EdgePathReport:
    """Regions met along an edge from its smaller vertex, with backtracks."""
    cs = rd.curve_system
    tri = cs.triangulation
    w = cs.counts[edge]
    regions = [rd.segment_region[(edge, s)] for s in range(w + 1)]
    tracks = [cs.curve_of[(edge, k)] for k in range(w)]
    backtracks = [k for k in range(1, w) if tracks[k - 1] == tracks[k]]
    degrees = [rd.regions[regions[0]].degree, rd.regions[regions[-1]].degree]
    return EdgePathReport(
        edge=tri.edge_label(edge),
        regions=regions,
        tracks=tracks,
        backtracks=backtracks,
        endpoint_degrees=degrees,
    )


def edge_path(tri: Triangulation, p: PatternCoords, edge: Union[int, str]) -> EdgePathReport:
    eid = tri.parse_edge(edge) if isinstance(edge, str) else edge
    if not 0 <= eid < tri.edge_count:
        raise UnknownEdge(f"edge index {eid} not in 0..{tri.edge_count - 1}")
    return edge_walk(decompose(tri, realize(tri, p)), eid)
