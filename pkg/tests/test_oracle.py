import networkx as nx
import pytest

from oddhole.constants import ORACLE_MAX_N_ENV
from oddhole.errors import ConfigError, SizeGuardError
from oddhole.generators import InstanceSpec, generate, plant
from oddhole.graph import Graph, Hole
from oddhole.oracle import brute_find_pyramids, brute_great_pyramids, brute_shortest_odd_hole, \
    brute_shortest_odd_holes, brute_subset_odd_hole, great_pyramid_case_holds, has_5hole, induced_paths, \
    iter_holes, jewelled_shortest_hole_exists, optimal_great_pyramids


def test_shortest_odd_hole(cycle, petersen):
    assert brute_shortest_odd_hole(cycle(9)).length == 9
    assert not brute_shortest_odd_hole(Graph.from_networkx(nx.complete_graph(5))).found
    assert not brute_shortest_odd_hole(cycle(8)).found
    assert brute_shortest_odd_hole(petersen).length == 5


def test_iter_holes_lists_each_hole_once(cycle):
    assert list(iter_holes(cycle(6))) == [(0, 1, 2, 3, 4, 5)]
    # a C4 and a C5 sharing vertex 0
    G = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 7), (7, 0)])
    assert sorted(iter_holes(G)) == [(0, 1, 2, 3), (0, 4, 5, 6, 7)]


def test_all_shortest_odd_holes(cycle, petersen):
    assert brute_shortest_odd_holes(cycle(5)) == [Hole((0, 1, 2, 3, 4))]
    holes = brute_shortest_odd_holes(petersen)
    assert len(holes) == 12
    assert holes == sorted(holes, key=Hole.sort_key)


@pytest.mark.parametrize("seed", range(8))
def test_two_oracles_agree(seed):
    G = generate(InstanceSpec("random", (9, 0.35), seed=seed))
    a, b = brute_shortest_odd_hole(G), brute_subset_odd_hole(G)
    assert a.length == b.length
    if a.found:
        assert a.hole == b.hole


def test_guards(cycle, petersen, monkeypatch):
    monkeypatch.delenv(ORACLE_MAX_N_ENV, raising=False)
    with pytest.raises(SizeGuardError):
        brute_shortest_odd_hole(cycle(17))
    assert brute_shortest_odd_hole(cycle(17), force=True).length == 17
    assert brute_shortest_odd_hole(cycle(17), max_vertices=17).length == 17
    with pytest.raises(SizeGuardError):
        brute_shortest_odd_hole(cycle(7), max_vertices=6)
    monkeypatch.setenv(ORACLE_MAX_N_ENV, "20")
    assert brute_shortest_odd_hole(cycle(19)).length == 19
    with pytest.raises(SizeGuardError):
        brute_subset_odd_hole(petersen)
    assert brute_subset_odd_hole(petersen, force=True).length == 5


@pytest.mark.parametrize("value", ["ten", "0", "-4", "1.5"])
def test_guard_env_must_be_positive_int(cycle, monkeypatch, value):
    monkeypatch.setenv(ORACLE_MAX_N_ENV, value)
    with pytest.raises(ConfigError):
        brute_shortest_odd_hole(cycle(7))
    assert brute_shortest_odd_hole(cycle(7), max_vertices=7).length == 7
    monkeypatch.setenv(ORACLE_MAX_N_ENV, "")
    assert brute_shortest_odd_hole(cycle(7)).length == 7


def test_induced_paths(cycle):
    G = cycle(6)
    assert induced_paths(G, 0, 3, G.vertex_mask) == [(0, 1, 2, 3), (0, 5, 4, 3)]
    assert induced_paths(G, 0, 3, 1 << 1 | 1 << 2) == [(0, 1, 2, 3)]
    assert induced_paths(G, 2, 2, 0) == [(2,)]


def test_pyramids_of_planted_instance():
    inst = plant(InstanceSpec("planted_pyramid", (3, 3, 2)))
    found = brute_find_pyramids(inst.graph)
    assert len(found) == 1
    assert found[0].apex == 0 and found[0].base == (3, 6, 8)
    great = brute_great_pyramids(inst.graph)
    assert great == [inst.witness]
    assert optimal_great_pyramids(inst.graph) == [inst.witness]
    assert great_pyramid_case_holds(inst.graph)


def test_case_checks(cycle, petersen):
    assert has_5hole(petersen) and not has_5hole(cycle(7))
    assert jewelled_shortest_hole_exists(cycle(5))
    assert not jewelled_shortest_hole_exists(cycle(7))
    assert not great_pyramid_case_holds(cycle(7))
    assert not great_pyramid_case_holds(petersen)
    assert brute_great_pyramids(cycle(6)) == []


def test_generate_is_pure():
    spec = InstanceSpec("random", (12, 0.4), seed=7)
    assert generate(spec) == generate(spec)
    assert generate(spec) != generate(InstanceSpec("random", (12, 0.4), seed=8))
