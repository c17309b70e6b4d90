import random

import pytest

from src.builder.maximal import build_maximal
from src.curves.curve_system import check_embedding
from src.curves.tracks import extract_tracks, realize, track_weight_multiset
from src.errors import NoAdjacentPair, NotNormal
from src.models.schemas import SurgeryCase
from src.patterns.coords import pattern_from_mapping, sum_patterns, vertex_link
from src.rewrite.returning_arcs import finger_move, normalize
from src.rewrite.surgery import surgery, surgery_case
from src.surface.generators import GeneratorSpec, generate


def test_octagon_splits_into_two_links(tetrahedron, octagon):
    cs = realize(tetrahedron, octagon)
    result, same_track = surgery(cs, tetrahedron.edge_id(0, 1), 0)
    assert same_track
    assert len(result.curves) == 2
    expected = sum_patterns(vertex_link(tetrahedron, 2), vertex_link(tetrahedron, 3))
    assert result == realize(tetrahedron, expected)
    assert surgery_case(cs, tetrahedron.edge_id(0, 1), 0) == SurgeryCase.A


def test_two_links_merge_into_quad(tetrahedron):
    p = sum_patterns(vertex_link(tetrahedron, 0), vertex_link(tetrahedron, 1))
    cs = realize(tetrahedron, p)
    result, same_track = surgery(cs, tetrahedron.edge_id(0, 1), 0)
    assert not same_track
    assert len(result.curves) == 1
    quad = pattern_from_mapping(tetrahedron, {"0-2": 1, "0-3": 1, "1-2": 1, "1-3": 1})
    assert result.weights() == quad


def test_parallel_copies_leave_returning_arcs(tetrahedron):
    link = vertex_link(tetrahedron, 0)
    cs = realize(tetrahedron, sum_patterns(link, link))
    edge = tetrahedron.edge_id(0, 1)
    assert surgery_case(cs, edge, 0) == SurgeryCase.C
    result, same_track = surgery(cs, edge, 0)
    assert not same_track and not result.is_normal
    normal, report = normalize(result)
    assert normal.is_empty
    assert report.annihilated_curves == 1


def test_no_adjacent_pair(tetrahedron):
    cs = realize(tetrahedron, vertex_link(tetrahedron, 0))
    with pytest.raises(NoAdjacentPair):
        surgery(cs, 0, 0)
    with pytest.raises(NoAdjacentPair):
        surgery(cs, 0, -1)


def test_surgery_needs_normal_system(tetrahedron):
    cs = realize(tetrahedron, vertex_link(tetrahedron, 3))
    moved = finger_move(cs, 1, cs.chords[1][0], 0, 0)
    with pytest.raises(NotNormal):
        surgery(moved, 0, 0)


def test_track_parity_over_random_surgeries(random_pattern):
    rng = random.Random(11)
    tris = [generate(GeneratorSpec('octahedron')), generate(GeneratorSpec('random', 10), seed=4),
            generate(GeneratorSpec('bipyramid', 6))]
    seen = set()
    trials = 0
    while trials < 1000:
        tri = rng.choice(tris)
        cs = realize(tri, random_pattern(tri, rng))
        edges = [e for e, n in enumerate(cs.counts) if n >= 2]
        if not edges:
            continue
        edge = rng.choice(edges)
        pos = rng.randrange(cs.counts[edge] - 1)
        result, same_track = surgery(cs, edge, pos)
        assert len(result.curves) == len(cs.curves) + (1 if same_track else -1)
        assert result.total_crossings == cs.total_crossings - 2
        seen.add(surgery_case(cs, edge, pos))
        trials += 1
    assert SurgeryCase.C in seen


def test_surgery_then_normalize_keeps_tracks_valid(tetrahedron, links_octagon):
    cs = realize(tetrahedron, links_octagon)
    result, _ = surgery(cs, tetrahedron.edge_id(2, 3), 1)
    normal, _ = normalize(result)
    for weights in track_weight_multiset(normal):
        assert sum(weights) in (3, 4, 8)


def adjacent_pairs(cs):
    return [(e, pos) for e, n in enumerate(cs.counts) for pos in range(n - 1)]


def test_surgery_then_normalize_stays_embedded(random_pattern):
    rng = random.Random(31)
    for trial in range(60):
        tri = generate(GeneratorSpec('random', rng.randint(4, 10)), seed=trial)
        cs = realize(tri, random_pattern(tri, rng))
        pairs = adjacent_pairs(cs)
        if not pairs:
            continue
        edge, pos = rng.choice(pairs)
        surgered, _ = surgery(cs, edge, pos)
        check_embedding(surgered)
        result, _ = normalize(surgered, rng=random.Random(trial))
        check_embedding(result)


@pytest.mark.parametrize('kind,size,seed', [
    ('tetrahedron', None, 0), ('octahedron', None, 0), ('bipyramid', 5, 0), ('random', 9, 2),
])
def test_surgery_on_maximal_pattern_annihilates_at_most_one_track(kind, size, seed):
    tri = generate(GeneratorSpec(kind, size), seed=seed)
    cs = realize(tri, build_maximal(tri).combined)
    assert len(extract_tracks(cs)) > 2
    for edge, pos in adjacent_pairs(cs):
        surgered, _ = surgery(cs, edge, pos)
        result, report = normalize(surgered)
        assert report.annihilated_curves < 2, f"both tracks vanished at {tri.edge_label(edge)}[{pos}]"
        check_embedding(result)
