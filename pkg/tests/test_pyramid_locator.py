import itertools

import pytest

from oddhole.constants import GREAT_PYRAMID_MAX_N_ENV
from oddhole.detection import DetectorTag
from oddhole.errors import InvalidVertexError, SizeGuardError
from oddhole.generators import InstanceSpec, generate, plant
from oddhole.graph import ShortestPathTree, is_odd_hole, iter_bits, to_mask
from oddhole.oracle import brute_shortest_odd_hole
from oddhole.pyramid_locator import Tuple12, _sphere, admissible_tuple, assemble_cycle, find_great_pyramid, \
    iter_tuples, ordered_triangles, trace_tuple, witness_tuple


def planted(l1, l2, l3, **kwargs):
    return plant(InstanceSpec("planted_pyramid", (l1, l2, l3), **kwargs))


@pytest.fixture(scope="module")
def p332():
    return planted(3, 3, 2)


@pytest.mark.parametrize("lengths,hint,hole,traced", [
    ((3, 3, 2), (0, 3, 6, 8, 5, 5, 5, 3, 3, 3, 3, 3), (0, 1, 2, 3, 6, 5, 4),
     {"q3": 2, "r2": 2, "s2": 1, "c2_path": 0, "d2_path": 0, "q1": 3}),
    ((4, 4, 3), (0, 4, 8, 11, 6, 6, 6, 4, 4, 4, 4, 4), (0, 1, 2, 3, 4, 8, 7, 6, 5),
     {"q3": 3, "r2": 2, "s2": 2, "c2_path": 0, "d2_path": 0, "q1": 4}),
    ((5, 5, 2), (0, 5, 10, 12, 7, 8, 8, 5, 5, 5, 5, 5), (0, 1, 2, 3, 4, 5, 10, 9, 8, 7, 6),
     {"q3": 2, "r2": 2, "s2": 2, "c2_path": 1, "d2_path": 0, "q1": 5}),
    ((5, 3, 2), (0, 5, 8, 10, 7, 7, 7, 5, 5, 5, 5, 5), (0, 1, 2, 3, 4, 5, 8, 7, 6),
     {"q3": 2, "r2": 2, "s2": 1, "c2_path": 0, "d2_path": 0, "q1": 5}),
])
def test_trace_planted_pyramids(lengths, hint, hole, traced):
    inst = planted(*lengths)
    assert inst.hint == Tuple12(*hint)
    trace = trace_tuple(inst.graph, inst.hint)
    assert trace.accepted and trace.rejected_at is None
    assert trace.hole.vertices == hole
    assert trace.hole.length == inst.expected_min
    assert trace.lengths() == traced


def test_trace_records_paths(p332):
    trace = trace_tuple(p332.graph, p332.hint)
    assert trace.q3 == (0, 7, 8)
    assert trace.r2 == (0, 4, 5)
    assert trace.s2 == (6, 5)
    assert trace.q1 == (0, 1, 2, 3)
    assert trace.y == (1 << 2) | (1 << 3) | (1 << 6) | (1 << 8)
    assert trace.cycle == assemble_cycle(trace.q1, trace.s2, trace.d2_path, trace.c2_path, trace.r2)


def test_trace_rejections(p332):
    G = p332.graph
    # a = c2
    assert trace_tuple(G, (0, 3, 6, 8, 0, 5, 5, 3, 3, 3, 3, 3)).rejected_at == "tuple"
    # d2 = b2
    assert trace_tuple(G, (0, 3, 6, 8, 5, 6, 5, 3, 3, 3, 3, 3)).rejected_at == "tuple"
    # base is not a triangle
    assert trace_tuple(G, (0, 3, 6, 7, 5, 5, 5, 3, 3, 3, 3, 3)).rejected_at == "tuple"
    # Y blocks every a-b3 path
    t = (0, 3, 6, 8, 5, 5, 5, 7, 1, 0, 1, 1)
    trace = trace_tuple(G, t)
    assert trace.rejected_at == "q3" and not trace.accepted
    assert trace.lengths()["q3"] is None
    with pytest.raises(InvalidVertexError):
        trace_tuple(G, (0, 3, 6, 8, 5, 5, 5, 3, 3, 3, 3, 42))


def test_witness_tuple_picks_the_middle_of_p2():
    w = planted(5, 5, 2).witness
    t = witness_tuple(w)
    assert (t.c2, t.d2, t.m2) == (7, 8, 8)
    assert t.v == t.v1 == t.v2 == t.v3 == t.v4 == t.b1 == 5
    w = planted(4, 4, 3).witness
    t = witness_tuple(w)
    assert t.c2 == t.d2 == t.m2 == 6


def test_admissible_tuples(p332):
    G = p332.graph
    assert admissible_tuple(G, p332.hint)
    assert not admissible_tuple(G, (0, 3, 6, 7, 5, 5, 5, 3, 3, 3, 3, 3))
    # v1v2 must be an edge
    assert not admissible_tuple(G, (0, 3, 6, 8, 5, 5, 5, 1, 1, 3, 1, 1))
    assert admissible_tuple(G, (0, 3, 6, 8, 5, 5, 5, 0, 1, 2, 3, 1))
    assert not admissible_tuple(G, (0, 3, 6, 8, 5, 5, 5, 0, 1, 2, 5, 1))
    assert not admissible_tuple(G, (0, 3, 6, 8, 5, 5, 5, 3, 3, 3, 3, 99))
    sample = list(itertools.islice(iter_tuples(G), 500))
    assert len(sample) == 500
    assert all(admissible_tuple(G, t) for t in sample)


def test_sphere_includes_forbidden_ends(cycle):
    G = cycle(7)
    tree = ShortestPathTree(G, 0, {1})
    assert _sphere(G, tree, 1) == to_mask([1, 6])
    assert _sphere(G, tree, 2) == to_mask([5])
    assert _sphere(G, tree, 0) == 0
    for d in range(1, 7):
        assert [t for t in G.vertices() if tree.distance_to(t) == d] == list(iter_bits(_sphere(G, tree, d)))


def test_ordered_triangles(p332):
    assert sorted(ordered_triangles(p332.graph)) == sorted(itertools.permutations((3, 6, 8)))


def test_hinted_mode(p332):
    inst = planted(4, 4, 3)
    det = find_great_pyramid(inst.graph, mode="hinted", tuples=[inst.hint])
    assert det.found and det.length == 9 and det.detector == DetectorTag.GREAT_PYRAMID
    bogus = [(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11), (99,) * 12]
    det = find_great_pyramid(inst.graph, mode="hinted", tuples=bogus + [inst.hint])
    assert det.length == 9
    assert not find_great_pyramid(inst.graph, mode="hinted", tuples=bogus).found
    assert not find_great_pyramid(inst.graph, mode="hinted", tuples=[]).found


def test_full_mode_finds_planted_pyramid(p332):
    det = find_great_pyramid(p332.graph)
    assert det.found and det.length == 7
    assert is_odd_hole(p332.graph, det.hole.vertices)
    assert find_great_pyramid(p332.graph, bound=5).length in (None, 7)


def test_full_mode_without_triangles(cycle):
    assert not find_great_pyramid(cycle(7)).found


def test_full_mode_guard(cycle, monkeypatch):
    monkeypatch.delenv(GREAT_PYRAMID_MAX_N_ENV, raising=False)
    with pytest.raises(SizeGuardError) as info:
        find_great_pyramid(cycle(11))
    assert info.value.n == 11 and info.value.bound == 10
    with pytest.raises(SizeGuardError):
        find_great_pyramid(cycle(7), max_vertices=6)
    monkeypatch.setenv(GREAT_PYRAMID_MAX_N_ENV, "12")
    assert find_great_pyramid(cycle(11)).found is False


@pytest.mark.slow
@pytest.mark.parametrize("lengths", [(5, 3, 2), (4, 4, 3)])
def test_full_mode_on_larger_pyramids(lengths):
    inst = planted(*lengths)
    det = find_great_pyramid(inst.graph, max_vertices=inst.graph.n)
    assert det.length == inst.expected_min


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(6))
def test_full_mode_is_sound(seed):
    G = generate(InstanceSpec("random", (8, 0.4), seed=seed))
    det = find_great_pyramid(G)
    if det.found:
        truth = brute_shortest_odd_hole(G)
        assert is_odd_hole(G, det.hole.vertices)
        assert det.length >= truth.length


@pytest.mark.parametrize("seed", range(4))
def test_hinted_mode_is_sound(seed):
    G = generate(InstanceSpec("random", (9, 0.45), seed=seed))
    tuples = list(itertools.islice(iter_tuples(G), 3000))
    det = find_great_pyramid(G, mode="hinted", tuples=tuples)
    if det.found:
        assert is_odd_hole(G, det.hole.vertices)
        assert det.length >= brute_shortest_odd_hole(G).length
