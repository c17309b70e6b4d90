"""
Bounded brute-force enumeration of tracks, used to certify maximality on small triangulations.
"""

import concurrent.futures
from typing import Iterable, List, Sequence, Tuple

import networkx as nx

from ..config.settings import settings
from ..curves.tracks import realize
from ..errors import BoundTooLarge, BuilderError
from ..patterns.coords import PatternCoords
from ..surface.triangulation import Triangulation
from ..utils.logger import get_logger
from .maximal import BuilderState, fits_beside

logger = get_logger(__name__)


def _edge_order(tri: Triangulation) -> Tuple[List[int], List[List[int]]]:
    """Edges in breadth-first face order, and the faces completed by each assignment."""
    dual = nx.Graph()
    dual.add_nodes_from(range(tri.face_count))
    dual.add_edges_from(tri.edge_faces)
    order: List[int] = []
    placed = {}
    for fid in nx.bfs_tree(dual, 0):
        for eid in tri.face_edges[fid]:
            if eid not in placed:
                placed[eid] = len(order)
                order.append(eid)
    completes: List[List[int]] = [[] for _ in order]
    for fid, edges in enumerate(tri.face_edges):
        completes[max(placed[e] for e in edges)].append(fid)
    return order, completes


def _face_ok(weights: Sequence[int], edges: Tuple[int, int, int]) -> bool:
    ab, bc, ac = (weights[e] for e in edges)
    return (ab + bc + ac) % 2 == 0 and ab <= bc + ac and bc <= ab + ac and ac <= ab + bc


def _single_curve(tri: Triangulation, weights: Tuple[int, ...]) -> bool:
    cs = realize(tri, PatternCoords(tri.edges, weights), check=False)
    return len(cs.curves) == 1


def _search_shard(tri: Triangulation, bound: int, first: int) -> List[Tuple[int, ...]]:
    """All single-curve vectors whose first edge in search order has weight first."""
    order, completes = _edge_order(tri)
    weights = [0] * tri.edge_count
    found: List[Tuple[int, ...]] = []

    def visit(i: int):
        if i == len(order):
            if any(weights) and _single_curve(tri, tuple(weights)):
                found.append(tuple(weights))
            return
        eid = order[i]
        values = (first,) if i == 0 else range(bound + 1)
        for w in values:
            weights[eid] = w
            if all(_face_ok(weights, tri.face_edges[f]) for f in completes[i]):
                visit(i + 1)
        weights[eid] = 0

    visit(0)
    return found


def oracle_enumerate_tracks(tri: Triangulation, weight_bound: int, jobs: int = 1) -> List[PatternCoords]:
    """Every valid single-track weight vector with entries <= weight_bound, sorted.

    With jobs > 1 the search is sharded on the first edge's weight; results
    are merged in shard order so the output does not depend on jobs.
    """
    if weight_bound < 1:
        raise BuilderError(f"weight_bound must be >= 1, got {weight_bound}")
    cap = settings.get_oracle_config()['cap']
    space = (weight_bound + 1) ** tri.edge_count
    if space > cap:
        raise BoundTooLarge(f"search space {space} exceeds TRACKLAB_ORACLE_CAP={cap}")

    shards = range(weight_bound + 1)
    if jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
            parts = list(executor.map(_search_shard, [tri] * len(shards), [weight_bound] * len(shards), shards))
    else:
        parts = [_search_shard(tri, weight_bound, first) for first in shards]

    vectors = sorted(v for part in parts for v in part)
    logger.debug(f"Oracle: {len(vectors)} tracks with bound {weight_bound} on v={tri.vertex_count}")
    return [PatternCoords(tri.edges, v) for v in vectors]


def find_extensions(state: BuilderState, candidates: Iterable[PatternCoords]) -> List[PatternCoords]:
    """Candidates that are new and realize disjointly beside the whole registry."""
    return [c for c in candidates if not state.contains(c) and fits_beside(state, c)]


def certify_maximal(state: BuilderState, weight_bound: int, jobs: int = 1) -> List[PatternCoords]:
    """Oracle tracks that would extend the registry; empty means maximal up to weight_bound."""
    return find_extensions(state, oracle_enumerate_tracks(state.triangulation, weight_bound, jobs))
