"""
Sphere triangulation generators.
Standard polyhedra plus a seeded random generator built from 1->3 subdivisions and edge flips.
"""

import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

from ..errors import InvalidSpec
from ..utils.logger import get_logger
from .triangulation import Face, Triangulation, build_triangulation

logger = get_logger(__name__)

KINDS = ('tetrahedron', 'octahedron', 'icosahedron', 'bipyramid', 'random')
MIN_SIZE = {'bipyramid': 3, 'random': 4}

ICOSAHEDRON_FACES: List[Face] = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 6), (2, 6, 7), (2, 3, 7), (3, 7, 8), (3, 4, 8),
    (4, 8, 9), (4, 5, 9), (5, 9, 10), (1, 5, 10), (1, 6, 10),
    (6, 7, 11), (7, 8, 11), (8, 9, 11), (9, 10, 11), (6, 10, 11),
]


@dataclass(frozen=True)
class GeneratorSpec:
    """Which family to generate and its size parameter (n for bipyramid, target v for random)."""
    kind: str
    size: Optional[int] = None

    @classmethod
    def parse(cls, text: str) -> 'GeneratorSpec':
        """Parse "tetrahedron", "bipyramid:5", "random:20" and so on."""
        name, _, param = text.strip().lower().partition(':')
        if name not in KINDS:
            raise InvalidSpec(f"unknown generator kind {name!r}; expected one of {', '.join(KINDS)}")
        if name in ('bipyramid', 'random'):
            if not param:
                raise InvalidSpec(f"{name} needs a size, e.g. {name}:6")
            try:
                size = int(param)
            except ValueError:
                raise InvalidSpec(f"bad size {param!r} for {name}") from None
            if size < MIN_SIZE[name]:
                raise InvalidSpec(f"{name} needs a size >= {MIN_SIZE[name]}, got {size}")
            return cls(name, size)
        if param:
            raise InvalidSpec(f"{name} takes no size")
        return cls(name)

    def label(self) -> str:
        return self.kind if self.size is None else f"{self.kind}:{self.size}"


def tetrahedron_faces() -> List[Face]:
    return [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]


def bipyramid_faces(n: int) -> List[Face]:
    """Equator 0..n-1, apexes n and n+1."""
    if n < 3:
        raise InvalidSpec(f"bipyramid needs n >= 3, got {n}")
    faces = []
    for apex in (n, n + 1):
        for i in range(n):
            faces.append((i, (i + 1) % n, apex))
    return faces


def _edges_of(faces: List[Face]) -> Dict[Tuple[int, int], List[int]]:
    incident: Dict[Tuple[int, int], List[int]] = {}
    for fid, (a, b, c) in enumerate(faces):
        for edge in ((a, b), (b, c), (a, c)):
            incident.setdefault(edge, []).append(fid)
    return incident


def _flip(faces: List[Face], edge: Tuple[int, int], incident: Dict[Tuple[int, int], List[int]],
          existing: Set[Tuple[int, int]]) -> bool:
    """Flip edge inside its two faces; skipped when the new diagonal already exists."""
    u, v = edge
    f1, f2 = incident[edge]
    a = next(x for x in faces[f1] if x not in edge)
    b = next(x for x in faces[f2] if x not in edge)
    diagonal = (min(a, b), max(a, b))
    if diagonal in existing:
        return False
    faces[f1] = tuple(sorted((a, b, u)))
    faces[f2] = tuple(sorted((a, b, v)))
    return True


def random_faces(target_v: int, seed: int) -> List[Face]:
    """Grow a tetrahedron to target_v vertices with subdivisions and legal flips."""
    if target_v < 4:
        raise InvalidSpec(f"random needs target_v >= 4, got {target_v}")
    rng = random.Random(seed)
    faces: List[Face] = [tuple(f) for f in tetrahedron_faces()]
    vertex_count = 4
    while vertex_count < target_v:
        fid = rng.randrange(len(faces))
        a, b, c = faces[fid]
        new = vertex_count
        faces[fid] = (a, b, new)
        faces.append((a, c, new))
        faces.append((b, c, new))
        vertex_count += 1

        for _ in range(rng.randint(0, 3)):
            incident = _edges_of(faces)
            edges = sorted(incident)
            _flip(faces, edges[rng.randrange(len(edges))], incident, set(incident))
    return faces


def generate(spec: GeneratorSpec, seed: int = 0) -> Triangulation:
    """Build the triangulation described by spec; deterministic in (spec, seed)."""
    if spec.kind == 'tetrahedron':
        faces = tetrahedron_faces()
    elif spec.kind == 'octahedron':
        faces = bipyramid_faces(4)
    elif spec.kind == 'icosahedron':
        faces = list(ICOSAHEDRON_FACES)
    elif spec.kind == 'bipyramid':
        faces = bipyramid_faces(spec.size if spec.size is not None else 0)
    elif spec.kind == 'random':
        faces = random_faces(spec.size if spec.size is not None else 0, seed)
    else:
        raise InvalidSpec(f"unknown generator kind {spec.kind!r}")
    tri = build_triangulation(faces)
    logger.debug(f"Generated {spec.label()} (seed={seed}): v={tri.vertex_count}")
    return tri
