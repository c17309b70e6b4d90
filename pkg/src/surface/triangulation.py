"""
Simplicial triangulations of the 2-sphere.
Builds and validates the complex and derives every incidence map later modules need.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Tuple

import networkx as nx

from ..errors import NotASphere, NotClosed, NotConnected, NotSimplicial, UnknownEdge, UnknownVertex
from ..utils.logger import get_logger

logger = get_logger(__name__)

Edge = Tuple[int, int]
Face = Tuple[int, int, int]


@dataclass(frozen=True)
class Triangulation:
    """Validated simplicial 2-sphere.

    Faces are stored with sorted vertex triples; face ids are list positions.
    Edges are (u, v) with u < v, sorted, and every "position along an edge"
    elsewhere counts from the u end.
    """
    vertex_count: int
    faces: Tuple[Face, ...]
    edges: Tuple[Edge, ...] = field(compare=False)
    edge_index: Dict[Edge, int] = field(compare=False, repr=False)
    edge_faces: Tuple[Tuple[int, int], ...] = field(compare=False, repr=False)
    face_edges: Tuple[Tuple[int, int, int], ...] = field(compare=False, repr=False)
    vertex_edges: Tuple[Tuple[int, ...], ...] = field(compare=False, repr=False)
    vertex_faces: Tuple[Tuple[int, ...], ...] = field(compare=False, repr=False)
    vertex_links: Tuple[Tuple[int, ...], ...] = field(compare=False, repr=False)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @property
    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count + self.face_count

    @property
    def is_tetrahedron(self) -> bool:
        return self.vertex_count == 4 and self.face_count == 4

    def edge_id(self, u: int, v: int) -> int:
        """Index of the edge joining u and v, in either order."""
        key = (u, v) if u < v else (v, u)
        try:
            return self.edge_index[key]
        except KeyError:
            raise UnknownEdge(f"no edge {key[0]}-{key[1]}") from None

    def other_face(self, edge: int, face: int) -> int:
        first, second = self.edge_faces[edge]
        return second if face == first else first

    def check_vertex(self, vertex: int) -> None:
        if not 0 <= vertex < self.vertex_count:
            raise UnknownVertex(f"vertex {vertex} not in 0..{self.vertex_count - 1}")

    def edge_label(self, edge: int) -> str:
        u, v = self.edges[edge]
        return f"{u}-{v}"

    def parse_edge(self, label: str) -> int:
        """Edge index from a "u-v" label."""
        try:
            u, v = (int(part) for part in label.split("-"))
        except ValueError:
            raise UnknownEdge(f"bad edge label {label!r}") from None
        return self.edge_id(u, v)

    def face_vertex_opposite(self, face: int, edge: int) -> int:
        u, v = self.edges[edge]
        return next(x for x in self.faces[face] if x != u and x != v)


def _faces_from_input(faces: Iterable[Sequence[int]]) -> List[Face]:
    result: List[Face] = []
    seen = set()
    for raw in faces:
        triple = tuple(int(x) for x in raw)
        if len(triple) != 3 or len(set(triple)) != 3:
            raise NotSimplicial(f"degenerate face {list(raw)}")
        if min(triple) < 0:
            raise NotSimplicial(f"negative vertex id in face {list(raw)}")
        face = tuple(sorted(triple))
        if face in seen:
            raise NotSimplicial(f"repeated face {list(face)}")
        seen.add(face)
        result.append(face)
    return result


def _cyclic_link(vertex: int, link_pairs: List[Edge]) -> Tuple[int, ...]:
    """Order the link of a vertex as a cycle; raises unless it is a single cycle."""
    graph = nx.Graph()
    graph.add_edges_from(link_pairs)
    if any(degree != 2 for _, degree in graph.degree()) or not nx.is_connected(graph):
        raise NotASphere(f"link of vertex {vertex} is not a single cycle")
    start = min(graph.nodes)
    cycle = [start]
    previous, current = None, start
    while True:
        neighbours = sorted(graph.neighbors(current))
        nxt = neighbours[0] if neighbours[0] != previous else neighbours[1]
        if nxt == start:
            break
        cycle.append(nxt)
        previous, current = current, nxt
    return tuple(cycle)


def build_triangulation(faces: Iterable[Sequence[int]], vertex_count: int = None) -> Triangulation:
    """Validate a face list and return the triangulation with all incidences populated."""
    face_list = _faces_from_input(faces)
    if not face_list:
        raise NotSimplicial("empty face list")

    used = {x for face in face_list for x in face}
    inferred = max(used) + 1
    count = inferred if vertex_count is None else vertex_count
    if count < inferred or len(used) != count:
        raise NotConnected(f"vertex ids must be exactly 0..{count - 1}")

    incident: Dict[Edge, List[int]] = {}
    for fid, face in enumerate(face_list):
        for u, v in combinations(face, 2):
            incident.setdefault((u, v), []).append(fid)

    for edge, owners in incident.items():
        if len(owners) != 2:
            raise NotClosed(f"edge {edge[0]}-{edge[1]} lies in {len(owners)} face(s)")

    edges = tuple(sorted(incident))
    edge_index = {edge: i for i, edge in enumerate(edges)}

    dual = nx.Graph()
    dual.add_nodes_from(range(len(face_list)))
    dual.add_edges_from(tuple(owners) for owners in incident.values())
    if not nx.is_connected(dual):
        raise NotConnected("faces do not form a connected complex")

    chi = count - len(edges) + len(face_list)
    if chi != 2:
        raise NotASphere(f"Euler characteristic is {chi}, expected 2")

    face_edges = tuple(
        (edge_index[(a, b)], edge_index[(b, c)], edge_index[(a, c)]) for a, b, c in face_list
    )

    vertex_edges: List[List[int]] = [[] for _ in range(count)]
    for eid, (u, v) in enumerate(edges):
        vertex_edges[u].append(eid)
        vertex_edges[v].append(eid)

    link_pairs: List[List[Edge]] = [[] for _ in range(count)]
    vertex_faces: List[List[int]] = [[] for _ in range(count)]
    for fid, face in enumerate(face_list):
        for x in face:
            a, b = (y for y in face if y != x)
            link_pairs[x].append((a, b))
            vertex_faces[x].append(fid)

    links = tuple(_cyclic_link(x, link_pairs[x]) for x in range(count))

    # order each vertex's faces to follow its cyclic link
    ordered_faces = []
    for x in range(count):
        cycle = links[x]
        by_pair = {}
        for fid in vertex_faces[x]:
            a, b = (y for y in face_list[fid] if y != x)
            by_pair[(a, b)] = fid
            by_pair[(b, a)] = fid
        ordered_faces.append(tuple(by_pair[(cycle[i], cycle[(i + 1) % len(cycle)])]
                                   for i in range(len(cycle))))

    tri = Triangulation(
        vertex_count=count,
        faces=tuple(face_list),
        edges=edges,
        edge_index=edge_index,
        edge_faces=tuple(tuple(incident[edge]) for edge in edges),
        face_edges=face_edges,
        vertex_edges=tuple(tuple(ids) for ids in vertex_edges),
        vertex_faces=tuple(ordered_faces),
        vertex_links=links,
    )
    logger.debug(f"Triangulation built: v={tri.vertex_count} e={tri.edge_count} f={tri.face_count}")
    return tri
