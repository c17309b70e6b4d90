"""
Completing a pattern to a maximal set of pairwise non-parallel tracks.
Each extension band-sums two tracks (or one track with itself) across a
region that is neither a one-vertex disc nor a pair of pants, normalizes,
and keeps any resulting track that is new and fits disjointly beside the
existing ones.
"""

from dataclasses import dataclass, field, replace
from typing import Iterator, List, Optional, Tuple

from ..config.settings import settings
from ..curves.tracks import extract_tracks, realize
from ..dual_tree.regions import (
    Region, RegionDecomposition, decompose, is_leaf_profile, is_pants_profile, region_profile,
)
from ..errors import BuilderError, InternalNoProgress, InvalidPattern, ParallelTracksPresent
from ..models.schemas import SurgeryStep
from ..patterns.coords import PatternCoords, sum_all, sum_patterns, vertex_link
from ..rewrite.returning_arcs import normalize
from ..rewrite.surgery import surgery
from ..surface.triangulation import Triangulation
from ..utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class BuilderState:
    """Registry of distinct track weights, their sum, and the surgery trace."""
    triangulation: Triangulation
    registry: Tuple[PatternCoords, ...]
    combined: PatternCoords
    trace: Tuple[SurgeryStep, ...] = field(default=())

    def __post_init__(self):
        tri = self.triangulation
        keys = [p.weights for p in self.registry]
        if len(set(keys)) != len(keys):
            raise ParallelTracksPresent("registry holds two tracks with equal weights")
        if sum_all(tri, self.registry) != self.combined:
            raise BuilderError("combined pattern is not the sum of the registry")
        limit = min(2 * tri.vertex_count - 3, tri.vertex_count + tri.face_count)
        if len(self.registry) > limit:
            raise BuilderError(f"{len(self.registry)} tracks exceed the bound {limit}")

    @property
    def size(self) -> int:
        return len(self.registry)

    def contains(self, weights: PatternCoords) -> bool:
        return any(p.weights == weights.weights for p in self.registry)

    def add(self, weights: PatternCoords) -> 'BuilderState':
        return replace(self, registry=self.registry + (weights,), combined=sum_patterns(self.combined, weights))

    def record(self, step: SurgeryStep) -> 'BuilderState':
        return replace(self, trace=self.trace + (step,))

    def track_labels(self) -> List[dict]:
        return [p.to_labels() for p in self.registry]


def seed_vertex_links(tri: Triangulation) -> BuilderState:
    links = tuple(vertex_link(tri, x) for x in range(tri.vertex_count))
    return BuilderState(tri, links, sum_all(tri, links))


def seed_from_pattern(tri: Triangulation, p: PatternCoords) -> BuilderState:
    """Registry = the tracks of p in extraction order, then any missing vertex links.

    Parallel tracks in p are refused.
    """
    tracks = [t.weights for t in extract_tracks(realize(tri, p))]
    present = {w.weights for w in tracks}
    for x in range(tri.vertex_count):
        link = vertex_link(tri, x)
        if link.weights not in present:
            tracks.append(link)
    return BuilderState(tri, tuple(tracks), sum_all(tri, tracks))


def _is_settled(rd: RegionDecomposition, region: Region) -> bool:
    profile = region_profile(rd, region.index)
    return is_leaf_profile(profile) or is_pants_profile(profile)


def candidate_pairs(rd: RegionDecomposition, region: Region) -> Iterator[Tuple[int, int, bool]]:
    """Adjacent crossing pairs whose open segment lies in region; distinct-track pairs first."""
    cs = rd.curve_system
    distinct, same = [], []
    for eid in range(len(cs.counts)):
        for s in range(1, cs.counts[eid]):
            if rd.segment_region[(eid, s)] != region.index:
                continue
            is_same = cs.curve_of[(eid, s - 1)] == cs.curve_of[(eid, s)]
            (same if is_same else distinct).append((eid, s - 1, is_same))
    yield from distinct
    yield from same


def fits_beside(state: BuilderState, weights: PatternCoords) -> bool:
    """True when registry + weights realizes as exactly those tracks."""
    tri = state.triangulation
    try:
        tracks = extract_tracks(realize(tri, sum_patterns(state.combined, weights)))
    except InvalidPattern:
        return False
    expected = sorted([p.weights for p in state.registry] + [weights.weights])
    return sorted(t.weights.weights for t in tracks) == expected


def extend_once(state: BuilderState) -> Tuple[BuilderState, bool]:
    """Run the first surgery, in the first unsettled region, that yields a new track.

    Every fresh track from that surgery that fits beside the registry is added
    under a single trace step.
    """
    tri = state.triangulation
    cs = realize(tri, state.combined)
    rd = decompose(tri, cs)
    failing = [r for r in rd.regions if not _is_settled(rd, r)]
    if not failing:
        return state, False

    for region in failing:
        for eid, pos, _ in candidate_pairs(rd, region):
            cut, same_track = surgery(cs, eid, pos)
            normal, _ = normalize(cut)
            fresh = sorted({t.weights.weights for t in extract_tracks(normal)
                            if not state.contains(t.weights)})
            grown, added = state, []
            for raw in fresh:
                weights = PatternCoords(tri.edges, raw)
                if fits_beside(grown, weights):
                    grown = grown.add(weights)
                    added.append(weights)
            if not added:
                continue
            step = SurgeryStep(
                region=region.index,
                edge=tri.edge_label(eid),
                positions=[pos, pos + 1],
                same_track=same_track,
                added=[w.to_labels() for w in added],
            )
            logger.log_extension(len(state.trace) + 1, region.index, step.edge, same_track, len(added))
            return grown.record(step), True

    raise InternalNoProgress(
        f"regions {[r.index for r in failing]} are not settled but no surgery adds a new track"
    )


def build_maximal(tri: Triangulation, seed: Optional[BuilderState] = None) -> BuilderState:
    """Run extend_once to a fixpoint; deterministic for a given triangulation and seed."""
    state = seed if seed is not None else seed_vertex_links(tri)
    logger.log_build_start(tri.vertex_count, state.size)
    limit = settings.MAX_EXTENSIONS or 2 * tri.vertex_count - 3
    for _ in range(limit + 1):
        state, progressed = extend_once(state)
        if not progressed:
            return state
    raise InternalNoProgress(f"no fixpoint after {limit} extensions")
