import pytest

from src.curves.curve_system import (
    analyze_face,
    check_embedding,
    curve_system_from_file,
    make_curve_system,
)
from src.curves.tracks import Track, are_parallel, extract_tracks, realize
from src.errors import InvalidPattern, MismatchedTriangulation, NotEmbedded, NotNormal
from src.models.schemas import CurveSystemFile
from src.patterns.coords import pattern_from_mapping, sum_patterns, vertex_link, zero_pattern
from src.rewrite.returning_arcs import finger_move
from src.surface.generators import GeneratorSpec, generate


def test_zero_pattern_realizes_empty(tetrahedron):
    cs = realize(tetrahedron, zero_pattern(tetrahedron))
    assert cs.is_empty and cs.is_normal
    assert extract_tracks(cs) == []


def test_vertex_link_realization(tetrahedron):
    cs = realize(tetrahedron, vertex_link(tetrahedron, 0))
    assert cs.total_crossings == 3
    assert sum(len(chords) for chords in cs.chords) == 3
    assert len(cs.curves) == 1


def test_weight_two_everywhere_is_four_curves(tetrahedron):
    cs = realize(tetrahedron, pattern_from_mapping(tetrahedron, {e: 2 for e in range(6)}))
    assert cs.total_crossings == 12
    assert len(cs.curves) == 4


def test_realize_rejects_invalid(tetrahedron):
    with pytest.raises(InvalidPattern):
        realize(tetrahedron, pattern_from_mapping(tetrahedron, {"0-1": 1}))


def test_track_weights_sum_to_pattern(tetrahedron, links_octagon):
    tracks = extract_tracks(realize(tetrahedron, links_octagon))
    totals = [sum(t.weights.weights[e] for t in tracks) for e in range(6)]
    assert tuple(totals) == links_octagon.weights
    assert all(t.size == t.weights.total for t in tracks)


def test_round_trip_over_random_patterns(rng, random_pattern):
    for v in (6, 9, 14):
        tri = generate(GeneratorSpec('random', v), seed=v)
        for _ in range(15):
            p = random_pattern(tri, rng)
            cs = realize(tri, p)
            check_embedding(cs)
            tracks = extract_tracks(cs)
            assert all(t.size >= 3 for t in tracks)
            summed = [sum(t.weights[e] for t in tracks) for e in range(tri.edge_count)]
            assert tuple(summed) == p.weights


def test_each_track_is_a_pattern(octahedron, rng, random_pattern):
    from src.patterns.coords import is_valid
    for _ in range(20):
        for track in extract_tracks(realize(octahedron, random_pattern(octahedron, rng))):
            assert is_valid(octahedron, track.weights)


def test_parallel(tetrahedron, octagon):
    t = extract_tracks(realize(tetrahedron, vertex_link(tetrahedron, 0)))[0]
    copy = Track(t.crossings, t.weights)
    other = extract_tracks(realize(tetrahedron, vertex_link(tetrahedron, 1)))[0]
    eight = extract_tracks(realize(tetrahedron, octagon))[0]
    assert are_parallel(t, copy)
    assert not are_parallel(t, other)
    assert not are_parallel(t, eight)


def test_parallel_mismatch(tetrahedron, octahedron):
    a = extract_tracks(realize(tetrahedron, vertex_link(tetrahedron, 0)))[0]
    b = extract_tracks(realize(octahedron, vertex_link(octahedron, 0)))[0]
    with pytest.raises(MismatchedTriangulation):
        are_parallel(a, b)


def test_extract_refuses_returning_arcs(tetrahedron):
    cs = realize(tetrahedron, vertex_link(tetrahedron, 3))
    moved = finger_move(cs, 1, cs.chords[1][0], 0, 0)
    assert not moved.is_normal
    with pytest.raises(NotNormal):
        extract_tracks(moved)


def test_crossing_chords_rejected(tetrahedron):
    # two arcs in face 0-1-2 joining 0-1 to 1-2 in the wrong order
    p = pattern_from_mapping(tetrahedron, {"0-1": 2, "1-2": 2, "1-3": 2, "0-3": 0})
    good = realize(tetrahedron, sum_patterns(p, zero_pattern(tetrahedron)), check=False)
    chords = [list(c) for c in good.chords]
    ab, bc, _ = tetrahedron.face_edges[0]
    chords[0] = [((ab, 0), (bc, 0)), ((ab, 1), (bc, 1))]
    with pytest.raises(NotEmbedded):
        make_curve_system(tetrahedron, good.counts, chords)


def test_missing_chord_rejected(tetrahedron):
    cs = realize(tetrahedron, vertex_link(tetrahedron, 0))
    chords = [list(c) for c in cs.chords]
    chords[0] = []
    with pytest.raises(NotEmbedded):
        make_curve_system(tetrahedron, cs.counts, chords)


def test_face_layout_pieces(tetrahedron):
    cs = realize(tetrahedron, pattern_from_mapping(tetrahedron, {e: 2 for e in range(6)}))
    layout = analyze_face(cs, 0)
    assert layout.piece_count == 4
    assert len(set(layout.vertex_piece.values())) == 3


def test_curve_file_round_trip(tetrahedron, links_octagon):
    cs = realize(tetrahedron, links_octagon)
    data = CurveSystemFile.model_validate(cs.to_file().model_dump())
    loaded = curve_system_from_file(data)
    assert loaded == cs


def test_curve_file_with_returning_arcs_round_trip(tetrahedron):
    cs = realize(tetrahedron, vertex_link(tetrahedron, 3))
    moved = finger_move(cs, 1, cs.chords[1][0], 0, 0)
    assert curve_system_from_file(moved.to_file()) == moved


def test_curve_file_rejects_bad_positions(tetrahedron):
    data = CurveSystemFile.model_validate({
        "triangulation": {"vertices": 4, "faces": [list(f) for f in tetrahedron.faces]},
        "curves": [[{"edge": "0-1", "pos": 0}, {"edge": "0-2", "pos": 3}, {"edge": "0-3", "pos": 0}]],
    })
    with pytest.raises(NotEmbedded):
        curve_system_from_file(data)


def test_curve_file_needs_triangulation():
    with pytest.raises(NotEmbedded):
        curve_system_from_file(CurveSystemFile(curves=[]))
