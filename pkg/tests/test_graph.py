import networkx as nx
import pytest

from oddhole.errors import GraphFormatError, InvalidVertexError
from oddhole.generators import InstanceSpec, generate
from oddhole.graph import Graph, Hole, ShortestPathTree, hole_distance, is_hole, is_odd_hole, is_path, \
    shortest_path_avoiding, to_mask


def test_shortest_path_on_cycle(cycle):
    G = cycle(7)
    assert shortest_path_avoiding(G, 0, 3) == (0, 1, 2, 3)
    assert shortest_path_avoiding(G, 0, 3, {1, 2}) == (0, 6, 5, 4, 3)


def test_forbidden_target_is_still_reachable(cycle):
    G = cycle(7)
    assert shortest_path_avoiding(G, 0, 3, {3}) == (0, 1, 2, 3)
    assert shortest_path_avoiding(G, 0, 3, to_mask([0, 3])) == (0, 1, 2, 3)


def test_bare_int_vertex_set_is_a_bitset(cycle):
    G = cycle(7)
    assert shortest_path_avoiding(G, 2, 4, {3}) == (2, 1, 0, 6, 5, 4)
    assert shortest_path_avoiding(G, 2, 4, 1 << 3) == (2, 1, 0, 6, 5, 4)
    # 3 == 0b11, the set {0, 1}
    assert shortest_path_avoiding(G, 2, 4, 3) == (2, 3, 4)
    assert G.without(1 << 3) == G.without({3})
    assert G.without(3) == G.without({0, 1})


def test_no_path():
    G = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert shortest_path_avoiding(G, 0, 3) is None
    assert shortest_path_avoiding(Graph.from_edges(3, [(0, 1), (1, 2)]), 0, 2, {1}) is None


def test_path_argument_errors(cycle):
    G = cycle(5)
    with pytest.raises(InvalidVertexError):
        shortest_path_avoiding(G, 0, 9)
    with pytest.raises(InvalidVertexError):
        shortest_path_avoiding(G, 2, 2)
    with pytest.raises(InvalidVertexError):
        shortest_path_avoiding(G.without({4}), 0, 4)


def test_tree_layers_and_predecessors(cycle):
    tree = ShortestPathTree(cycle(7), 0)
    assert tree.layers == [to_mask([0]), to_mask([1, 6]), to_mask([2, 5]), to_mask([3, 4])]
    # ties go to the smallest-id predecessor
    G = Graph.from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert ShortestPathTree(G, 0).path_to(3) == (0, 1, 3)


@pytest.mark.parametrize("seed", range(6))
def test_distances_agree_with_networkx(seed):
    G = generate(InstanceSpec("random", (12, 0.25), seed=seed))
    ref = G.to_networkx()
    for s in G.vertices():
        tree = ShortestPathTree(G, s)
        lengths = nx.single_source_shortest_path_length(ref, s)
        for t in G.vertices():
            assert tree.distance_to(t) == lengths.get(t)
            path = tree.path_to(t)
            if t in lengths:
                assert len(path) - 1 == lengths[t]
                assert is_path(G, path) and path[0] == s and path[-1] == t
            else:
                assert path is None


@pytest.mark.parametrize("seed", range(6))
def test_forbidding_more_never_shortens(seed):
    G = generate(InstanceSpec("random", (11, 0.3), seed=seed))
    inf = float("inf")
    for s in (0, 5):
        for t in G.vertices():
            if t == s:
                continue
            lengths = []
            for forbidden in (0, to_mask([1]), to_mask([1, 2]), to_mask([1, 2, 3, 4])):
                p = shortest_path_avoiding(G, s, t, forbidden)
                lengths.append(inf if p is None else len(p) - 1)
                if p is not None:
                    assert not to_mask(p[1:-1]) & forbidden
            assert lengths == sorted(lengths)


def test_is_hole(cycle):
    G = cycle(5)
    assert is_hole(G, (0, 1, 2, 3, 4))
    assert is_hole(G, (2, 3, 4, 0, 1))
    assert is_hole(G, (0, 4, 3, 2, 1))
    assert not is_hole(G, (0, 2, 1, 3, 4))
    assert not is_hole(G, (0, 1, 2, 3, 4, 0))
    assert not is_hole(cycle(5, extra_edges=[(0, 2)]), (0, 1, 2, 3, 4))
    assert not is_hole(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]), (0, 1, 2))
    assert is_odd_hole(G, (0, 1, 2, 3, 4))
    assert not is_odd_hole(cycle(6), range(6))


def test_is_path_induced(cycle):
    G = cycle(5)
    assert is_path(G, (0, 1, 2, 3))
    assert is_path(G, (0, 1, 2, 3), induced=True)
    assert is_path(G, (0, 1, 2, 3, 4))
    assert not is_path(G, (0, 1, 2, 3, 4), induced=True)
    assert not is_path(G, (0, 2))
    assert not is_path(G, (0, 1, 0))


def test_hole_distance_and_arc():
    C = Hole(tuple(range(7)))
    assert hole_distance(C, 0, 3) == 3
    assert hole_distance(C, 0, 4) == 3
    assert hole_distance(C, 1, 6) == 2
    assert C.arc(5, 1) == (5, 6, 0, 1)
    with pytest.raises(InvalidVertexError):
        C.position(9)


def test_canonical_hole():
    assert Hole((3, 4, 0, 1, 2)).canonical().vertices == (0, 1, 2, 3, 4)
    assert Hole((0, 4, 3, 2, 1)).canonical().vertices == (0, 1, 2, 3, 4)
    assert Hole((5, 9, 2, 7, 8)).canonical().vertices == (2, 7, 8, 5, 9)
    assert Hole((0, 1, 2, 3, 4)).sort_key() < Hole((0, 1, 2, 3, 4, 5, 6)).sort_key()


def test_from_edges_errors():
    with pytest.raises(GraphFormatError):
        Graph.from_edges(3, [(0, 5)])
    with pytest.raises(GraphFormatError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(GraphFormatError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_neighbourhoods_and_without(cycle):
    G = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert G.closed_neighborhood({1}) == 0b111
    assert G.open_neighborhood({0}) == 0b010
    C = cycle(5)
    H = C.without({0})
    assert H.n == 5
    assert H.vertices() == [1, 2, 3, 4]
    assert H.m == 3
    assert not H.has_edge(0, 1) and not H.has_edge(1, 0)
    assert H.closed_neighborhood({1}) == to_mask([1, 2])
    assert C.without(0) is C


def test_networkx_round_trip(petersen):
    ref = nx.petersen_graph()
    assert petersen.n == 10 and petersen.m == 15
    assert sorted(petersen.edges()) == sorted(tuple(sorted(e)) for e in ref.edges())
    assert nx.is_isomorphic(petersen.to_networkx(), ref)
