"""
Patterns as edge-weight vectors.
A pattern is determined up to isotopy by how often it meets each edge; the
matching conditions on every face say when such a vector is realizable.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from ..errors import InvalidPattern, MismatchedTriangulation, UnknownEdge
from ..models.schemas import FaceViolation, PatternFile, ValidationReport
from ..surface.triangulation import Edge, Triangulation
from ..utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class PatternCoords:
    """Non-negative integer weight per edge, aligned with tri.edges."""
    edges: Tuple[Edge, ...]
    weights: Tuple[int, ...]

    def __post_init__(self):
        if len(self.edges) != len(self.weights):
            raise InvalidPattern(f"{len(self.weights)} weights for {len(self.edges)} edges")
        if any(w < 0 for w in self.weights):
            raise InvalidPattern("weights must be non-negative")

    def __getitem__(self, edge: int) -> int:
        return self.weights[edge]

    @property
    def total(self) -> int:
        """Number of crossings with the 1-skeleton."""
        return sum(self.weights)

    @property
    def is_zero(self) -> bool:
        return not any(self.weights)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, w in enumerate(self.weights) if w)

    def to_labels(self, include_zero: bool = False) -> Dict[str, int]:
        return {f"{u}-{v}": w for (u, v), w in zip(self.edges, self.weights) if w or include_zero}

    def to_file(self) -> PatternFile:
        return PatternFile(weights=self.to_labels())

    def same_triangulation(self, other: 'PatternCoords') -> bool:
        return self.edges == other.edges


@dataclass(frozen=True)
class CornerTriple:
    """Arc counts at the corners of one face; corners follow the sorted face vertices."""
    face: int
    vertices: Tuple[int, int, int]
    corners: Tuple[int, int, int]

    def at(self, vertex: int) -> int:
        return self.corners[self.vertices.index(vertex)]


def zero_pattern(tri: Triangulation) -> PatternCoords:
    return PatternCoords(tri.edges, (0,) * tri.edge_count)


def pattern_from_mapping(tri: Triangulation, mapping: Mapping[Union[str, Edge, int], int]) -> PatternCoords:
    """Build a pattern from {"u-v": w}, {(u, v): w} or {edge_index: w}; missing edges weigh 0."""
    weights = [0] * tri.edge_count
    for key, w in mapping.items():
        if isinstance(key, str):
            eid = tri.parse_edge(key)
        elif isinstance(key, tuple):
            eid = tri.edge_id(*key)
        else:
            eid = int(key)
            if not 0 <= eid < tri.edge_count:
                raise UnknownEdge(f"edge index {eid} not in 0..{tri.edge_count - 1}")
        weights[eid] = int(w)
    return PatternCoords(tri.edges, tuple(weights))


def pattern_from_file(tri: Triangulation, data: PatternFile) -> PatternCoords:
    return pattern_from_mapping(tri, data.weights)


def _face_weights(tri: Triangulation, p: PatternCoords, face: int) -> Tuple[int, int, int]:
    ab, bc, ac = tri.face_edges[face]
    return p.weights[ab], p.weights[bc], p.weights[ac]


def _face_reasons(ab: int, bc: int, ac: int) -> List[str]:
    reasons = []
    if (ab + bc + ac) % 2:
        reasons.append("odd weight sum")
    for name, w, rest in (("AB", ab, bc + ac), ("BC", bc, ab + ac), ("AC", ac, ab + bc)):
        if w > rest:
            reasons.append(f"{name}={w} exceeds the other two ({rest})")
    return reasons


def corner_coordinates(tri: Triangulation, p: PatternCoords, face: int) -> CornerTriple:
    """t_X = (w(e1) + w(e2) - w(opposite)) / 2 at each corner X of the face."""
    _check_same(tri, p)
    ab, bc, ac = _face_weights(tri, p, face)
    reasons = _face_reasons(ab, bc, ac)
    if reasons:
        raise InvalidPattern(f"face {face} {list(tri.faces[face])}: " + "; ".join(reasons))
    corners = ((ab + ac - bc) // 2, (ab + bc - ac) // 2, (bc + ac - ab) // 2)
    return CornerTriple(face, tri.faces[face], corners)


def validate_pattern(tri: Triangulation, p: PatternCoords) -> ValidationReport:
    """List every face that violates parity or the triangle inequality."""
    problems = []
    if p.edges != tri.edges:
        problems.append("weights are not defined on exactly the edges of the triangulation")
        return ValidationReport(valid=False, problems=problems)

    violations = []
    for fid in range(tri.face_count):
        weights = _face_weights(tri, p, fid)
        reasons = _face_reasons(*weights)
        if reasons:
            violations.append(FaceViolation(
                face=fid, vertices=list(tri.faces[fid]), weights=list(weights), reasons=reasons,
            ))
    report = ValidationReport(valid=not violations, violations=violations)
    logger.log_validation("pattern", [f"face {v.face}: {', '.join(v.reasons)}" for v in violations])
    return report


def is_valid(tri: Triangulation, p: PatternCoords) -> bool:
    return p.edges == tri.edges and all(
        not _face_reasons(*_face_weights(tri, p, fid)) for fid in range(tri.face_count)
    )


def require_valid(tri: Triangulation, p: PatternCoords) -> None:
    report = validate_pattern(tri, p)
    if not report.valid:
        detail = report.problems or [f"face {v.face}: {', '.join(v.reasons)}" for v in report.violations]
        raise InvalidPattern("; ".join(detail))


def vertex_link(tri: Triangulation, vertex: int) -> PatternCoords:
    """Weight 1 on every edge at the vertex, 0 elsewhere."""
    tri.check_vertex(vertex)
    weights = [0] * tri.edge_count
    for eid in tri.vertex_edges[vertex]:
        weights[eid] = 1
    return PatternCoords(tri.edges, tuple(weights))


def sum_patterns(p: PatternCoords, q: PatternCoords) -> PatternCoords:
    """Edgewise sum; the realization is the disjoint union when p and q are disjoint."""
    if not p.same_triangulation(q):
        raise MismatchedTriangulation("patterns live on different triangulations")
    return PatternCoords(p.edges, tuple(a + b for a, b in zip(p.weights, q.weights)))


def sum_all(tri: Triangulation, patterns: Iterable[PatternCoords]) -> PatternCoords:
    total = zero_pattern(tri)
    for p in patterns:
        total = sum_patterns(total, p)
    return total


def _check_same(tri: Triangulation, p: PatternCoords) -> None:
    if p.edges != tri.edges:
        raise MismatchedTriangulation("pattern was built on a different triangulation")
