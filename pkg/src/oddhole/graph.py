from dataclasses import dataclass
from typing import *

from .errors import GraphFormatError, InvalidVertexError

# an ordered vertex sequence v0..vk; its length is k
Path = Tuple[int, ...]
# a vertex set: either a bitset int (bit v set iff v is a member) or an
# iterable of vertex ids; a bare int is always read as a bitset, so {3} and
# 1 << 3 name the same set while 3 names {0, 1}
VertexSet = Union[int, Iterable[int]]


def lsb(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def as_mask(vertices: VertexSet) -> int:
    # vertex sets travel either as bitsets or as plain iterables
    if isinstance(vertices, int):
        return vertices
    if vertices is None:
        return 0
    return to_mask(vertices)


class Graph:
    """
    Simple undirected graph on vertex ids 0..n-1 with bitset adjacency.

    adj[v] has bit u set iff uv is an edge. vertex_mask holds the live vertices:
    `G.without(X)` keeps the ids of G and only clears X, so anything found in
    G minus X names vertices of G directly.
    """

    __slots__ = ("n", "adj", "vertex_mask")

    def __init__(self, n: int, adj: Sequence[int], vertex_mask: Optional[int] = None) -> None:
        assert len(adj) == n, f"expected {n} adjacency rows, got {len(adj)}"
        self.n = n
        self.adj = tuple(adj)
        self.vertex_mask = (1 << n) - 1 if vertex_mask is None else vertex_mask

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        # self-loops and repeated edges are rejected, not normalized
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if (adj[u] >> v) & 1:
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def from_networkx(cls, nx_graph) -> "Graph":
        nodes = sorted(nx_graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in nx_graph.edges()))

    def to_networkx(self):
        import networkx as nx
        g = nx.Graph()
        g.add_nodes_from(self.vertices())
        g.add_edges_from(self.edges())
        return g

    @property
    def m(self) -> int:
        return sum(self.adj[v].bit_count() for v in iter_bits(self.vertex_mask)) // 2

    def is_vertex(self, v) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool((self.vertex_mask >> v) & 1)

    def check_vertex(self, v) -> None:
        if not self.is_vertex(v):
            raise InvalidVertexError(f"{v!r} is not a vertex of this graph (n={self.n})")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def vertices(self) -> List[int]:
        return list(iter_bits(self.vertex_mask))

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in iter_bits(self.vertex_mask) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def closed_neighborhood(self, vertices: VertexSet) -> int:
        """N[X] as a bitset."""
        mask = as_mask(vertices)
        out = mask
        for v in iter_bits(mask):
            out |= self.adj[v]
        return out & self.vertex_mask

    def open_neighborhood(self, vertices: VertexSet) -> int:
        """N(X) = N[X] minus X, as a bitset."""
        mask = as_mask(vertices)
        return self.closed_neighborhood(mask) & ~mask

    def without(self, vertices: VertexSet) -> "Graph":
        """
        G minus X on the same vertex ids. X is a VertexSet: pass {3} or
        1 << 3 to drop vertex 3; a bare 3 is the bitset {0, 1}.
        """
        removed = as_mask(vertices) & self.vertex_mask
        if not removed:
            return self
        keep = self.vertex_mask & ~removed
        adj = [self.adj[v] & keep if (keep >> v) & 1 else 0 for v in range(self.n)]
        return Graph(self.n, adj, keep)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and (self.n, self.adj, self.vertex_mask) == (other.n, other.adj, other.vertex_mask)

    def __hash__(self) -> int:
        return hash((self.n, self.adj, self.vertex_mask))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Hole:
    """An induced cycle c1..cm (m >= 4), stored as a cyclic vertex sequence."""

    vertices: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        return to_mask(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self.vertices

    def position(self, v: int) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise InvalidVertexError(f"vertex {v} is not on the hole") from None

    def canonical(self) -> "Hole":
        # minimum vertex first, then its smaller hole neighbour
        seq = self.vertices
        if len(seq) < 3:
            return self
        i = seq.index(min(seq))
        rotated = seq[i:] + seq[:i]
        if rotated[-1] < rotated[1]:
            rotated = (rotated[0],) + tuple(reversed(rotated[1:]))
        return Hole(rotated)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.length, self.canonical().vertices)

    def arc(self, i: int, j: int) -> Path:
        """Vertices from position i forward to position j, both included."""
        m = self.length
        steps = (j - i) % m
        return tuple(self.vertices[(i + k) % m] for k in range(steps + 1))


class ShortestPathTree:
    """
    Breadth-first tree from `source` whose interior vertices avoid `forbidden_interior`.

    Vertices are explored in increasing id order and every vertex keeps its
    smallest-id predecessor in the previous layer, so `path_to(t)` is the
    canonical shortest path. Targets are only constrained as ends: a forbidden
    t is still reachable through allowed interior vertices, which is exactly
    what a single-pair search with an unconstrained end returns.
    `forbidden_interior` is a VertexSet (a bare int is a bitset).
    """

    __slots__ = ("graph", "source", "layers", "pred")

    def __init__(self, G: Graph, source: int, forbidden_interior: VertexSet = 0) -> None:
        G.check_vertex(source)
        self.graph = G
        self.source = source
        adj = G.adj
        allowed = G.vertex_mask & ~as_mask(forbidden_interior)
        visited = frontier = 1 << source
        layers = [frontier]
        pred: Dict[int, int] = {}
        while frontier:
            reach = 0
            for u in iter_bits(frontier):
                reach |= adj[u]
            nxt = reach & allowed & ~visited
            if not nxt:
                break
            for w in iter_bits(nxt):
                pred[w] = lsb(adj[w] & frontier)
            visited |= nxt
            layers.append(nxt)
            frontier = nxt
        self.layers = layers
        self.pred = pred

    def _last_hop(self, t: int) -> Optional[Tuple[int, int]]:
        row = self.graph.adj[t]
        for depth, layer in enumerate(self.layers):
            hit = row & layer
            if hit:
                return depth + 1, lsb(hit)
        return None

    def distance_to(self, t: int) -> Optional[int]:
        if t == self.source:
            return 0
        if not self.graph.is_vertex(t):
            return None
        hop = self._last_hop(t)
        return None if hop is None else hop[0]

    def path_to(self, t: int) -> Optional[Path]:
        if t == self.source:
            return (t,)
        if not self.graph.is_vertex(t):
            return None
        hop = self._last_hop(t)
        if hop is None:
            return None
        path = [t]
        u = hop[1]
        while u != self.source:
            path.append(u)
            u = self.pred[u]
        path.append(u)
        path.reverse()
        return tuple(path)


def shortest_path_avoiding(G: Graph, s: int, t: int, forbidden_interior: VertexSet = 0) -> Optional[Path]:
    """
    Canonical shortest s-t path whose interior avoids `forbidden_interior`;
    None if there is none. The forbidden set is a VertexSet, so a bare int
    is a bitset: forbid vertex 3 with {3} or 1 << 3, not 3.
    """
    G.check_vertex(s)
    G.check_vertex(t)
    if s == t:
        raise InvalidVertexError(f"path ends must differ, got s = t = {s}")
    return ShortestPathTree(G, s, forbidden_interior).path_to(t)


def is_path(G: Graph, seq: Sequence[int], induced: bool = False) -> bool:
    try:
        vertices = tuple(seq)
    except TypeError:
        return False
    if not vertices or len(set(vertices)) != len(vertices):
        return False
    if not all(G.is_vertex(v) for v in vertices):
        return False
    if any(not G.has_edge(u, v) for u, v in zip(vertices, vertices[1:])):
        return False
    if induced:
        mask = to_mask(vertices)
        for i, v in enumerate(vertices):
            expected = (i > 0) + (i < len(vertices) - 1)
            if (G.adj[v] & mask).bit_count() != expected:
                return False
    return True


def is_hole(G: Graph, seq) -> bool:
    """True iff seq lists at least four distinct vertices forming an induced cycle of G, in cyclic order."""
    try:
        vertices = tuple(seq)
    except TypeError:
        return False
    m = len(vertices)
    if m < 4 or len(set(vertices)) != m:
        return False
    if not all(G.is_vertex(v) for v in vertices):
        return False
    mask = to_mask(vertices)
    for i, v in enumerate(vertices):
        if not G.has_edge(v, vertices[i - 1]):
            return False
        if (G.adj[v] & mask).bit_count() != 2:
            return False
    return True


def is_odd_hole(G: Graph, seq) -> bool:
    return is_hole(G, seq) and len(tuple(seq)) % 2 == 1


def hole_distance(C: Hole, u: int, v: int) -> int:
    """d_C(u, v): the shorter of the two arcs of C between u and v."""
    i, j = C.position(u), C.position(v)
    forward = (j - i) % C.length
    return min(forward, C.length - forward)
