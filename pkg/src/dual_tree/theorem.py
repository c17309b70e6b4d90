"""
Degree, region-shape and counting checks for a pattern's dual tree.
"""

from typing import List, Tuple

from ..curves.tracks import realize
from ..errors import ParallelTracksPresent
from ..models.schemas import TheoremReport
from ..patterns.coords import PatternCoords, require_valid
from ..surface.triangulation import Triangulation
from ..utils.logger import get_logger
from .regions import decompose, is_leaf_profile, is_pants_profile, region_profile
from .tree import DualTree, dual_tree

logger = get_logger(__name__)


def build_dual_tree(tri: Triangulation, p: PatternCoords) -> DualTree:
    """Realize p, refuse parallel tracks, and return D_P."""
    require_valid(tri, p)
    rd = decompose(tri, realize(tri, p))
    seen = {}
    for index, track in enumerate(rd.tracks):
        key = track.weights.weights
        if key in seen:
            raise ParallelTracksPresent(f"tracks {seen[key]} and {index} have equal weights")
        seen[key] = index
    return dual_tree(rd)


def check_tree(tri: Triangulation, tree: DualTree) -> TheoremReport:
    rd = tree.decomposition
    profiles = [region_profile(rd, r.index) for r in rd.regions]
    failures: List[str] = []
    witnesses: List[int] = []

    def fail(message: str, region: int = None):
        failures.append(message)
        if region is not None and region not in witnesses:
            witnesses.append(region)

    for prof in profiles:
        if prof.degree not in (1, 3):
            fail(f"(a) region {prof.region} has degree {prof.degree}", prof.region)
        elif prof.degree == 1 and not is_leaf_profile(prof):
            fail(f"(b) leaf region {prof.region} has {prof.interior_vertices} vertices, chi={prof.euler_char}",
                 prof.region)
        elif prof.degree == 3 and not is_pants_profile(prof):
            fail(f"(c) degree-3 region {prof.region} has {prof.interior_vertices} vertices, chi={prof.euler_char}",
                 prof.region)

    v, e, f = tri.vertex_count, tri.edge_count, tri.face_count
    degree_one = sum(1 for prof in profiles if prof.degree == 1)
    degree_three = sum(1 for prof in profiles if prof.degree == 3)
    if degree_one != v or 2 * degree_three != f:
        fail(f"(d) {degree_one} leaves and {degree_three} degree-3 regions, expected {v} and {f // 2}")
    if 2 * tree.e_p != f + 2 * v - 2:
        fail(f"(e) e_P={tree.e_p}, expected {f // 2 + v - 1}")
    chi_total = sum(prof.euler_char for prof in profiles)
    if chi_total != 2:
        fail(f"region Euler characteristics sum to {chi_total}, expected 2")

    return TheoremReport(
        passed=not failures,
        v=v, e=e, f=f,
        v_p=tree.v_p,
        e_p=tree.e_p,
        degree_one=degree_one,
        degree_three=degree_three,
        degrees=tree.degrees(),
        failures=failures,
        witness_regions=witnesses,
        profiles=profiles,
    )


def verify_theorem1(tri: Triangulation, p: PatternCoords) -> TheoremReport:
    """Check every D_P vertex is a one-vertex disc leaf or a vertex-free pair of pants, and the counts."""
    report = check_tree(tri, build_dual_tree(tri, p))
    logger.log_theorem_report(report.passed, report.e_p, report.failures)
    return report


def region_table(tree: DualTree) -> List[Tuple[int, int, int, int, str]]:
    """(region, degree, vertices, chi, shape) rows for display."""
    rows = []
    for node in sorted(tree.graph.nodes):
        prof = tree.graph.nodes[node]['profile']
        shape = 'disc' if is_leaf_profile(prof) else 'pants' if is_pants_profile(prof) else '-'
        rows.append((prof.region, prof.degree, prof.interior_vertices, prof.euler_char, shape))
    return rows
