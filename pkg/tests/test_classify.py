import pytest

from src.curves.classify import classify_track, pattern_kind
from src.curves.tracks import extract_tracks, realize
from src.errors import UnsupportedTriangulation
from src.models.schemas import PatternKind, TrackKind
from src.patterns.coords import pattern_from_mapping, sum_all, sum_patterns, vertex_link, zero_pattern


def only_track(tri, p):
    tracks = extract_tracks(realize(tri, p))
    assert len(tracks) == 1
    return tracks[0]


def test_vertex_link_kind(tetrahedron, links):
    for link in links:
        c = classify_track(tetrahedron, only_track(tetrahedron, link))
        assert (c.n, c.kind) == (3, TrackKind.VERTEX_LINK)


def test_octagon_kind(tetrahedron, octagon):
    c = classify_track(tetrahedron, only_track(tetrahedron, octagon))
    assert (c.n, c.kind) == (8, TrackKind.OCTAGON)


def test_quad_kind(tetrahedron):
    quad = pattern_from_mapping(tetrahedron, {"0-1": 1, "1-2": 1, "2-3": 1, "0-3": 1})
    c = classify_track(tetrahedron, only_track(tetrahedron, quad))
    assert (c.n, c.kind) == (4, TrackKind.QUAD)


def test_no_kind_off_tetrahedron(octahedron):
    c = classify_track(octahedron, only_track(octahedron, vertex_link(octahedron, 0)))
    assert c.n == 4
    assert c.kind is None


@pytest.mark.parametrize("extra", [None, "quad"])
def test_links_are_normal(tetrahedron, links, extra):
    p = sum_all(tetrahedron, links)
    if extra:
        p = sum_patterns(p, pattern_from_mapping(tetrahedron, {"0-2": 1, "0-3": 1, "1-2": 1, "1-3": 1}))
    assert pattern_kind(tetrahedron, p) == PatternKind.NORMAL


def test_empty_pattern_is_normal(tetrahedron):
    assert pattern_kind(tetrahedron, zero_pattern(tetrahedron)) == PatternKind.NORMAL


def test_links_octagon_is_almost_normal(tetrahedron, links_octagon):
    assert pattern_kind(tetrahedron, links_octagon) == PatternKind.ALMOST_NORMAL


def test_two_octagons_are_other(tetrahedron, octagon):
    assert pattern_kind(tetrahedron, sum_patterns(octagon, octagon)) == PatternKind.OTHER


def test_pattern_kind_needs_tetrahedron(octahedron):
    with pytest.raises(UnsupportedTriangulation):
        pattern_kind(octahedron, vertex_link(octahedron, 0))
