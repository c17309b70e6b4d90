"""
Shared fixtures: standard triangulations, the golden tetrahedron pattern,
and factories for random normal and non-normal curve systems.
"""

import random

import pytest

from src.curves.tracks import realize
from src.errors import NotEmbedded
from src.patterns.coords import PatternCoords, pattern_from_mapping, sum_all, sum_patterns, vertex_link
from src.rewrite.returning_arcs import finger_move
from src.surface.generators import GeneratorSpec, generate


@pytest.fixture
def tetrahedron():
    return generate(GeneratorSpec('tetrahedron'))


@pytest.fixture
def octahedron():
    return generate(GeneratorSpec('octahedron'))


@pytest.fixture
def bipyramid3():
    return generate(GeneratorSpec('bipyramid', 3))


@pytest.fixture
def links(tetrahedron):
    return [vertex_link(tetrahedron, x) for x in range(4)]


@pytest.fixture
def octagon(tetrahedron):
    """Weight 2 on 0-1 and 2-3, 1 on the other four edges."""
    return pattern_from_mapping(tetrahedron, {
        "0-1": 2, "2-3": 2, "0-2": 1, "0-3": 1, "1-2": 1, "1-3": 1,
    })


@pytest.fixture
def links_octagon(tetrahedron, links, octagon):
    """Four vertex links plus one octagon."""
    return sum_patterns(sum_all(tetrahedron, links), octagon)


@pytest.fixture
def rng():
    return random.Random(20240521)


def edge_curve(tri, eid: int) -> PatternCoords:
    """Boundary of a small neighbourhood of one edge."""
    u, v = tri.edges[eid]
    weights = list(sum_patterns(vertex_link(tri, u), vertex_link(tri, v)).weights)
    weights[eid] = 0
    return PatternCoords(tri.edges, tuple(weights))


@pytest.fixture
def random_pattern():
    """Factory: random non-zero combination of vertex links, sometimes with one edge curve."""
    def make(tri, rng: random.Random, max_mult: int = 2) -> PatternCoords:
        mults = [rng.randint(0, max_mult) for _ in range(tri.vertex_count)]
        mults[rng.randrange(tri.vertex_count)] += 1
        parts = [vertex_link(tri, x) for x, m in enumerate(mults) for _ in range(m)]
        if rng.random() < 0.5:
            parts.append(edge_curve(tri, rng.randrange(tri.edge_count)))
        return sum_all(tri, parts)
    return make


@pytest.fixture
def random_non_normal(random_pattern):
    """Factory: realize a random pattern, then apply random finger moves."""
    def make(tri, rng: random.Random, moves: int = 3, attempts: int = 30):
        cs = realize(tri, random_pattern(tri, rng))
        for _ in range(moves):
            for _ in range(attempts):
                faces = [fid for fid, chords in enumerate(cs.chords) if chords]
                face = rng.choice(faces)
                chord = rng.choice(cs.chords[face])
                edge = rng.choice(tri.face_edges[face])
                segment = rng.randint(0, cs.counts[edge])
                try:
                    cs = finger_move(cs, face, chord, edge, segment)
                    break
                except NotEmbedded:
                    continue
        return cs
    return make
