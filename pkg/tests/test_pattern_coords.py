import pytest

from src.curves.tracks import extract_tracks, realize
from src.errors import InvalidPattern, MismatchedTriangulation, UnknownEdge, UnknownVertex
from src.patterns.coords import (
    PatternCoords,
    corner_coordinates,
    is_valid,
    pattern_from_mapping,
    sum_all,
    sum_patterns,
    validate_pattern,
    vertex_link,
    zero_pattern,
)


def face_pattern(tri, ab, bc, ac, face=0):
    """Pattern with the given weights on the sides of one face, zero elsewhere."""
    weights = [0] * tri.edge_count
    e_ab, e_bc, e_ac = tri.face_edges[face]
    weights[e_ab], weights[e_bc], weights[e_ac] = ab, bc, ac
    return PatternCoords(tri.edges, tuple(weights))


def test_corner_single_arc(tetrahedron):
    triple = corner_coordinates(tetrahedron, face_pattern(tetrahedron, 1, 1, 0), 0)
    assert triple.corners == (0, 1, 0)
    assert triple.at(1) == 1


def test_corner_symmetric(tetrahedron):
    p = pattern_from_mapping(tetrahedron, {e: 2 for e in range(6)})
    assert corner_coordinates(tetrahedron, p, 0).corners == (1, 1, 1)


def test_corner_triangle_violation(tetrahedron):
    with pytest.raises(InvalidPattern):
        corner_coordinates(tetrahedron, face_pattern(tetrahedron, 4, 1, 1), 0)


def test_zero_is_valid(octahedron):
    report = validate_pattern(octahedron, zero_pattern(octahedron))
    assert report.valid and not report.violations


def test_single_edge_fails_parity_on_both_faces(tetrahedron):
    p = pattern_from_mapping(tetrahedron, {"0-1": 1})
    report = validate_pattern(tetrahedron, p)
    assert not report.valid
    assert sorted(v.face for v in report.violations) == sorted(tetrahedron.edge_faces[0])
    assert all("odd weight sum" in v.reasons for v in report.violations)


def test_weight_two_everywhere_is_valid(tetrahedron):
    assert validate_pattern(tetrahedron, pattern_from_mapping(tetrahedron, {e: 2 for e in range(6)})).valid


def test_mismatched_edges_reported(tetrahedron, octahedron):
    report = validate_pattern(tetrahedron, zero_pattern(octahedron))
    assert not report.valid and report.problems


def test_negative_weights_rejected(tetrahedron):
    with pytest.raises(InvalidPattern):
        PatternCoords(tetrahedron.edges, (-1, 0, 0, 0, 0, 0))


def test_vertex_link_weights(tetrahedron):
    assert vertex_link(tetrahedron, 0).to_labels() == {"0-1": 1, "0-2": 1, "0-3": 1}
    with pytest.raises(UnknownVertex):
        vertex_link(tetrahedron, 9)


def test_vertex_links_realize_as_single_tracks(octahedron):
    for x in range(octahedron.vertex_count):
        tracks = extract_tracks(realize(octahedron, vertex_link(octahedron, x)))
        assert len(tracks) == 1 and tracks[0].size == 4


def test_sum_identities(tetrahedron, links):
    p = links[2]
    assert sum_patterns(p, zero_pattern(tetrahedron)) == p
    assert sum_all(tetrahedron, links).weights == (2,) * 6


def test_sum_mismatch(tetrahedron, octahedron):
    with pytest.raises(MismatchedTriangulation):
        sum_patterns(zero_pattern(tetrahedron), zero_pattern(octahedron))


def test_links_octagon_has_five_tracks(tetrahedron, links_octagon):
    tracks = extract_tracks(realize(tetrahedron, links_octagon))
    assert sorted(t.size for t in tracks) == [3, 3, 3, 3, 8]


def test_closure_under_sum(octahedron, rng, random_pattern):
    for _ in range(50):
        p, q = random_pattern(octahedron, rng), random_pattern(octahedron, rng)
        assert is_valid(octahedron, sum_patterns(p, q))


def test_corners_reconstruct_weights(rng, random_pattern):
    from src.surface.generators import GeneratorSpec, generate
    tri = generate(GeneratorSpec('random', 10), seed=4)
    for _ in range(20):
        p = random_pattern(tri, rng)
        for fid in range(tri.face_count):
            t_a, t_b, t_c = corner_coordinates(tri, p, fid).corners
            ab, bc, ac = (p[e] for e in tri.face_edges[fid])
            assert (t_a + t_b, t_b + t_c, t_a + t_c) == (ab, bc, ac)


def test_track_count_adds_for_disjoint_link_sums(octahedron, rng):
    for _ in range(30):
        mults_p = [rng.randint(0, 2) for _ in range(6)]
        mults_q = [rng.randint(0, 2) for _ in range(6)]
        p = sum_all(octahedron, [vertex_link(octahedron, x) for x, m in enumerate(mults_p) for _ in range(m)])
        q = sum_all(octahedron, [vertex_link(octahedron, x) for x, m in enumerate(mults_q) for _ in range(m)])
        count = len(extract_tracks(realize(octahedron, sum_patterns(p, q))))
        assert count == sum(mults_p) + sum(mults_q)


@pytest.mark.parametrize("key", [-1, 6, 99, "0-9", (0, 7)])
def test_mapping_rejects_unknown_edges(tetrahedron, key):
    with pytest.raises(UnknownEdge):
        pattern_from_mapping(tetrahedron, {key: 2})


def test_mapping_accepts_every_key_form(tetrahedron):
    by_index = pattern_from_mapping(tetrahedron, {5: 1})
    u, v = tetrahedron.edges[5]
    assert by_index == pattern_from_mapping(tetrahedron, {f"{u}-{v}": 1})
    assert by_index == pattern_from_mapping(tetrahedron, {(v, u): 1})
