import os
import sys

import networkx as nx
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

from oddhole.graph import Graph  # noqa: E402


def _cycle(k, n=None, extra_edges=()):
    edges = [(i, (i + 1) % k) for i in range(k)] + list(extra_edges)
    return Graph.from_edges(k if n is None else n, edges)


@pytest.fixture
def cycle():
    """C_k on vertices 0..k-1, optionally padded to n vertices and with extra edges."""
    return _cycle


@pytest.fixture
def from_nx():
    return Graph.from_networkx


@pytest.fixture
def petersen():
    return Graph.from_networkx(nx.petersen_graph())


@pytest.fixture
def bipartite_graphs(cycle):
    return [
        cycle(6),
        cycle(8),
        Graph.from_networkx(nx.complete_bipartite_graph(3, 3)),
        Graph.from_networkx(nx.grid_2d_graph(3, 3)),
    ]


@pytest.fixture
def no_odd_hole_graphs(bipartite_graphs):
    return bipartite_graphs + [
        Graph.from_networkx(nx.balanced_tree(2, 3)),
        Graph.from_networkx(nx.complete_graph(5)),
        # chordal: a fan
        Graph.from_edges(6, [(0, i) for i in range(1, 6)] + [(i, i + 1) for i in range(1, 5)]),
        Graph.from_edges(3, []),
    ]
