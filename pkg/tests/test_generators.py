import pytest

from oddhole.errors import InstanceParameterError
from oddhole.generators import InstanceSpec, generate, plant
from oddhole.graph import is_hole
from oddhole.oracle import brute_shortest_odd_hole
from oddhole.structure import verify_great_pyramid, verify_jewel


def test_cycle_family():
    inst = plant(InstanceSpec("cycle", (7,)))
    assert (inst.graph.n, inst.graph.m, inst.expected_min) == (7, 7, 7)
    inst = plant(InstanceSpec("cycle", (7,), ambient=3, seed=2))
    assert (inst.graph.n, inst.graph.m, inst.expected_min) == (10, 10, 7)
    assert is_hole(inst.graph, inst.witness.vertices)
    assert plant(InstanceSpec("cycle", (6,))).expected_min is None
    with pytest.raises(InstanceParameterError):
        plant(InstanceSpec("cycle", (2,)))
    with pytest.raises(InstanceParameterError):
        plant(InstanceSpec("cycle", (7.5,)))


@pytest.mark.parametrize("lengths", [(3, 3, 3), (3, 2, 2), (4, 3, 2), (3, 3, 1), (3, 3, 0), (3, 3)])
def test_planted_pyramid_rejects_bad_lengths(lengths):
    with pytest.raises(InstanceParameterError):
        plant(InstanceSpec("planted_pyramid", lengths))


def test_planted_pyramid_layout():
    inst = plant(InstanceSpec("planted_pyramid", (3, 3, 2)))
    assert inst.graph.n == 9 and inst.graph.m == 11
    assert inst.witness.base == (3, 6, 8)
    assert inst.witness.paths == ((0, 1, 2, 3), (0, 4, 5, 6), (0, 7, 8))
    assert inst.expected_min == 7


@pytest.mark.parametrize("seed", range(3))
def test_planted_pyramid_with_ambient_vertices(seed):
    inst = plant(InstanceSpec("planted_pyramid", (3, 3, 2), ambient=2, seed=seed))
    G = inst.graph
    assert G.n == 11
    assert verify_great_pyramid(G, inst.witness, 7)
    assert brute_shortest_odd_hole(G).length == inst.expected_min == 7
    assert 1 <= inst.notes["attempts"] <= 50
    # ambient vertices are pairwise nonadjacent
    assert not G.has_edge(9, 10)


@pytest.mark.parametrize("p_len,expected", [(2, 5), (3, 5), (4, 7), (5, 7), (6, 9)])
def test_planted_jewel(p_len, expected):
    inst = plant(InstanceSpec("planted_jewel", (p_len,)))
    assert inst.graph.n == 4 + p_len
    assert inst.expected_min == expected
    assert verify_jewel(inst.graph, inst.witness)
    assert brute_shortest_odd_hole(inst.graph).length == expected


def test_planted_jewel_rejects_short_path():
    with pytest.raises(InstanceParameterError):
        plant(InstanceSpec("planted_jewel", (1,)))


def test_random_family():
    G = generate(InstanceSpec("random", (10, 0.0)))
    assert G.n == 10 and G.m == 0
    G = generate(InstanceSpec("random", (6, 1.0)))
    assert G.m == 15
    assert generate(InstanceSpec("random", (0, 0.5))).n == 0
    with pytest.raises(InstanceParameterError):
        generate(InstanceSpec("random", (5, 1.5)))
    with pytest.raises(InstanceParameterError):
        generate(InstanceSpec("random", (5,)))


def test_planted_major_family():
    inst = plant(InstanceSpec("planted_major", (9,), patterns=((0, 1, 2, 3), (4, 6))))
    G = inst.graph
    assert G.n == 11
    assert sorted(G.neighbors(9)) == [0, 1, 2, 3]
    assert sorted(G.neighbors(10)) == [4, 6]
    with pytest.raises(InstanceParameterError):
        plant(InstanceSpec("planted_major", (9,), patterns=((0, 9),)))
    with pytest.raises(InstanceParameterError):
        plant(InstanceSpec("planted_major", (9,), patterns=((1, 1),)))


def test_plant_errors():
    with pytest.raises(InstanceParameterError):
        plant(InstanceSpec("wheel", (5,)))
    with pytest.raises(InstanceParameterError):
        plant(InstanceSpec("cycle", (5,), ambient=-1))


def test_spec_to_dict():
    spec = InstanceSpec("planted_major", (9,), seed=4, patterns=[[0, 4]])
    assert spec.to_dict() == {"family": "planted_major", "args": [9], "ambient": 0, "seed": 4,
                              "patterns": [[0, 4]]}


def test_petersen_family(petersen):
    inst = plant(InstanceSpec("petersen"))
    assert inst.graph == petersen and inst.expected_min == 5
