"""
The great-pyramid detector.

Every candidate is guessed from a 12-tuple (a, b1, b2, b3, c2, d2, m2, v, v1,
v2, v3, v4) and rebuilt from five restricted shortest paths:

    Y  = N[b1] | (N[{v, v1, v2}] - {v1, v2, v3, v4})
    Q3 = a..b3   avoiding X1 = Y | N[b2]
    R2 = a..c2   and S2 = b2..d2, avoiding X2 = Y | N[V(Q3) - a]
    C2 = c2..m2  and D2 = d2..m2, avoiding X3 = Y | N[V(Q3)]
    Q1 = a..b1   avoiding X4 = N[V(R2 + S2 + C2 + D2 + Q3) - a]

and the candidate is Q1, the edge b1b2, S2, D2, C2 and R2 back to a. Only
path interiors are constrained. When G has no 5-hole, no jewelled shortest
odd hole and a great pyramid, some tuple yields a shortest odd hole.

`full` mode enumerates the tuples the correctness argument can produce and
shares BFS work between them; `hinted` mode runs the same body on a supplied
tuple stream.
"""
import logging
from dataclasses import dataclass
from typing import *

from tqdm import tqdm

from .cleaning import five_tuple_sets
from .constants import great_pyramid_max_n
from .detection import Detection, DetectorTag, HoleRecorder, best_of
from .errors import InvalidVertexError, SizeGuardError
from .graph import Graph, Hole, Path, ShortestPathTree, iter_bits, to_mask
from .structure import GreatPyramidWitness
from .workers import chunked, map_partitions

MODE_FULL = "full"
MODE_HINTED = "hinted"
LOCATOR_MODES = (MODE_FULL, MODE_HINTED)

# trace rejection steps
STEP_TUPLE = "tuple"
STEP_Q3 = "q3"
STEP_R2_S2 = "r2/s2"
STEP_C2_D2 = "c2/d2"
STEP_Q1 = "q1"
STEP_CYCLE = "cycle"


class Tuple12(NamedTuple):
    a: int
    b1: int
    b2: int
    b3: int
    c2: int
    d2: int
    m2: int
    v: int
    v1: int
    v2: int
    v3: int
    v4: int

    def base_ok(self, G: Graph) -> bool:
        """a, b1, b2, b3 pairwise distinct and b1b2b3 a triangle."""
        a, b1, b2, b3 = self[:4]
        if len({a, b1, b2, b3}) != 4:
            return False
        return G.has_edge(b1, b2) and G.has_edge(b2, b3) and G.has_edge(b1, b3)


@dataclass
class TupleTrace:
    """Everything the per-tuple body built, up to the step that rejected."""

    tuple: Tuple12
    y: int = 0
    q3: Optional[Path] = None
    r2: Optional[Path] = None
    s2: Optional[Path] = None
    c2_path: Optional[Path] = None
    d2_path: Optional[Path] = None
    q1: Optional[Path] = None
    cycle: Optional[Tuple[int, ...]] = None
    hole: Optional[Hole] = None
    rejected_at: Optional[str] = None

    @property
    def accepted(self) -> bool:
        return self.hole is not None

    def lengths(self) -> Dict[str, Optional[int]]:
        out = {}
        for name in ("q3", "r2", "s2", "c2_path", "d2_path", "q1"):
            p = getattr(self, name)
            out[name] = None if p is None else len(p) - 1
        return out


def y_set(G: Graph, t: Tuple12) -> int:
    core = G.closed_neighborhood(to_mask((t.v, t.v1, t.v2))) & ~to_mask((t.v1, t.v2, t.v3, t.v4))
    return G.closed_neighborhood(1 << t.b1) | core


def assemble_cycle(q1: Path, s2: Path, d2_path: Path, c2_path: Path, r2: Path) -> Tuple[int, ...]:
    """Q1 (a..b1), S2 (b2..d2), D2 (d2..m2), C2 reversed (m2..c2), R2 reversed (c2..a, a dropped)."""
    return (tuple(q1) + tuple(s2) + tuple(d2_path[1:])
            + tuple(reversed(c2_path))[1:] + tuple(reversed(r2))[1:-1])


def _toward(G: Graph, target: int, source: int, forbidden: int) -> Optional[Path]:
    # shortest target..source path, read off the tree rooted at source
    p = ShortestPathTree(G, source, forbidden).path_to(target)
    return None if p is None else tuple(reversed(p))


def trace_tuple(G: Graph, t: Tuple12) -> TupleTrace:
    t = Tuple12(*t)
    for x in t:
        G.check_vertex(x)
    trace = TupleTrace(t)
    if not t.base_ok(G) or t.c2 == t.a or t.d2 == t.b2:
        trace.rejected_at = STEP_TUPLE
        return trace
    a, b1, b2, b3 = t.a, t.b1, t.b2, t.b3
    Y = trace.y = y_set(G, t)

    X1 = Y | G.closed_neighborhood(1 << b2)
    trace.q3 = ShortestPathTree(G, a, X1).path_to(b3)
    if trace.q3 is None:
        trace.rejected_at = STEP_Q3
        return trace
    q3_mask = to_mask(trace.q3)

    X2 = Y | G.closed_neighborhood(q3_mask & ~(1 << a))
    trace.r2 = ShortestPathTree(G, a, X2).path_to(t.c2)
    trace.s2 = ShortestPathTree(G, b2, X2).path_to(t.d2)
    if trace.r2 is None or trace.s2 is None:
        trace.rejected_at = STEP_R2_S2
        return trace

    X3 = Y | G.closed_neighborhood(q3_mask)
    trace.c2_path = _toward(G, t.c2, t.m2, X3)
    trace.d2_path = _toward(G, t.d2, t.m2, X3)
    if trace.c2_path is None or trace.d2_path is None:
        trace.rejected_at = STEP_C2_D2
        return trace

    used = to_mask(trace.r2) | to_mask(trace.s2) | to_mask(trace.c2_path) | to_mask(trace.d2_path) | q3_mask
    X4 = G.closed_neighborhood(used & ~(1 << a))
    trace.q1 = ShortestPathTree(G, a, X4).path_to(b1)
    if trace.q1 is None:
        trace.rejected_at = STEP_Q1
        return trace

    trace.cycle = assemble_cycle(trace.q1, trace.s2, trace.d2_path, trace.c2_path, trace.r2)
    recorder = HoleRecorder(G, DetectorTag.GREAT_PYRAMID)
    if not G.has_edge(b1, b2) or not recorder.offer(trace.cycle):
        trace.rejected_at = STEP_CYCLE
        return trace
    trace.hole = recorder.best
    return trace


def locate_from_tuple(G: Graph, t: Tuple12) -> Optional[Hole]:
    return trace_tuple(G, t).hole


def admissible_tuple(G: Graph, t: Tuple12) -> bool:
    """
    Tuples the enumeration keeps: a valid base, and either v = v1 = .. = v4 = b1
    or v1v2 an edge with v adjacent to v1 or v2 and v3, v4 in N[{v, v1, v2}].
    """
    t = Tuple12(*t)
    if not all(G.is_vertex(x) for x in t) or not t.base_ok(G):
        return False
    if t.v == t.v1 == t.v2 == t.v3 == t.v4 == t.b1:
        return True
    if not G.has_edge(t.v1, t.v2):
        return False
    if not (G.has_edge(t.v, t.v1) or G.has_edge(t.v, t.v2)):
        return False
    near = G.closed_neighborhood(to_mask((t.v, t.v1, t.v2)))
    return bool((near >> t.v3) & 1) and bool((near >> t.v4) & 1)


def ordered_triangles(G: Graph) -> List[Tuple[int, int, int]]:
    adj = G.adj
    out = []
    for b1 in iter_bits(G.vertex_mask):
        for b2 in iter_bits(adj[b1]):
            for b3 in iter_bits(adj[b1] & adj[b2]):
                out.append((b1, b2, b3))
    return out


def iter_tuples(G: Graph) -> Iterator[Tuple12]:
    """Every admissible tuple, lazily. Only sensible on very small graphs."""
    live = list(iter_bits(G.vertex_mask))
    v_parts: List[Tuple[int, int, int, int, int]] = []
    for v1 in live:
        for v2 in iter_bits(G.adj[v1]):
            for v in iter_bits(G.adj[v1] | G.adj[v2]):
                near = list(iter_bits(G.closed_neighborhood(to_mask((v, v1, v2)))))
                for v3 in near:
                    for v4 in near:
                        v_parts.append((v, v1, v2, v3, v4))
    for b1, b2, b3 in ordered_triangles(G):
        tail = [(b1,) * 5] + v_parts
        for a in live:
            if a in (b1, b2, b3):
                continue
            for c2 in live:
                for d2 in live:
                    for m2 in live:
                        for vs in tail:
                            yield Tuple12(a, b1, b2, b3, c2, d2, m2, *vs)


def witness_tuple(w: GreatPyramidWitness) -> Tuple12:
    """
    The tuple the correctness argument guesses for an optimal great pyramid
    whose big major vertices all lie in N[b1]: m2 the middle of P2, c2 and d2
    at distance |P3| from its ends when P2 is long enough, else equal to m2.
    """
    p2 = w.paths[1]
    l2 = len(p2) - 1
    l3 = w.height
    m2 = p2[(l2 + 1) // 2]
    if l2 >= 2 * l3:
        c2, d2 = p2[l3], p2[l2 - l3]
    else:
        c2 = d2 = m2
    b1, b2, b3 = w.base
    return Tuple12(w.apex, b1, b2, b3, c2, d2, m2, b1, b1, b1, b1, b1)


def _disjoint_chain(r2: Path, c2_path: Path, d2_path: Path, s2: Path) -> bool:
    # a..c2..m2..d2..b2 must not revisit a vertex
    seq = tuple(r2) + tuple(c2_path[1:]) + tuple(reversed(d2_path))[1:] + tuple(reversed(s2))[1:]
    return len(set(seq)) == len(seq)


class _TreeCache:
    """Shortest path trees keyed by (source, forbidden interior)."""

    def __init__(self, G: Graph) -> None:
        self.graph = G
        self.trees: Dict[Tuple[int, int], ShortestPathTree] = {}

    def get(self, source: int, forbidden: int) -> ShortestPathTree:
        key = (source, forbidden)
        tree = self.trees.get(key)
        if tree is None:
            tree = self.trees[key] = ShortestPathTree(self.graph, source, forbidden)
        return tree


def _sphere(G: Graph, tree: ShortestPathTree, d: int) -> int:
    """Vertices at distance exactly d from the tree root, forbidden ends included."""
    if d < 1 or d > len(tree.layers):
        return 0
    inner = closer = 0
    for layer in tree.layers[:d]:
        inner |= layer
    for u in iter_bits(inner & ~tree.layers[d - 1]):
        closer |= G.adj[u]
    near = 0
    for u in iter_bits(tree.layers[d - 1]):
        near |= G.adj[u]
    return near & G.vertex_mask & ~inner & ~closer


def _y_sets(G: Graph, b1: int, zsets: Sequence[int]) -> List[int]:
    n1 = G.closed_neighborhood(1 << b1)
    seen = {n1}
    out = [n1]
    for z in zsets:
        y = n1 | z
        if y not in seen:
            seen.add(y)
            out.append(y)
    return out


def _search_triangles(G: Graph, triangles: Sequence[Tuple[int, int, int]], zsets: Sequence[int],
                      bound: Optional[int] = None, progress: bool = False) -> Detection:
    recorder = HoleRecorder(G, DetectorTag.GREAT_PYRAMID)
    live = G.vertex_mask
    for b1, b2, b3 in tqdm(triangles, desc="great pyramid", disable=not progress):
        n1 = G.closed_neighborhood(1 << b1)
        n2 = G.closed_neighborhood(1 << b2)
        ys = _y_sets(G, b1, zsets)
        for a in iter_bits(live & ~n1 & ~n2 & ~(1 << b3)):
            cache = _TreeCache(G)
            q1_cache: Dict[int, Optional[Path]] = {}
            for Y in ys:
                q3 = cache.get(a, Y | n2).path_to(b3)
                if q3 is None:
                    continue
                l3 = len(q3) - 1
                # P1 and P2 are both longer than P3
                limit = min((x for x in (bound, recorder.best_length) if x is not None), default=None)
                if limit is not None and 2 * l3 + 3 > limit:
                    continue
                q3_mask = to_mask(q3)
                X2 = Y | G.closed_neighborhood(q3_mask & ~(1 << a))
                X3 = Y | G.closed_neighborhood(q3_mask)
                tree_a = cache.get(a, X2)
                tree_b = cache.get(b2, X2)

                def attempt(c2: int, d2: int, m2: int) -> None:
                    r2, s2 = tree_a.path_to(c2), tree_b.path_to(d2)
                    if r2 is None or s2 is None:
                        return
                    tree_m = cache.get(m2, X3)
                    c2_path, d2_path = tree_m.path_to(c2), tree_m.path_to(d2)
                    if c2_path is None or d2_path is None:
                        return
                    c2_path, d2_path = tuple(reversed(c2_path)), tuple(reversed(d2_path))
                    if not _disjoint_chain(r2, c2_path, d2_path, s2):
                        return
                    used = to_mask(r2) | to_mask(s2) | to_mask(c2_path) | to_mask(d2_path) | q3_mask
                    X4 = G.closed_neighborhood(used & ~(1 << a))
                    if X4 not in q1_cache:
                        q1_cache[X4] = cache.get(a, X4).path_to(b1)
                    q1 = q1_cache[X4]
                    if q1 is not None:
                        recorder.offer(assemble_cycle(q1, s2, d2_path, c2_path, r2))

                # c2 = d2 = m2
                for m2 in iter_bits(live & ~(1 << a) & ~(1 << b2)):
                    attempt(m2, m2, m2)
                # c2, d2 at distance |Q3| from a and b2
                for c2 in iter_bits(_sphere(G, tree_a, l3)):
                    for d2 in iter_bits(_sphere(G, tree_b, l3)):
                        for m2 in iter_bits(live):
                            if not (m2 == c2 == d2):
                                attempt(c2, d2, m2)
    return recorder.result()


def find_great_pyramid(G: Graph, mode: str = MODE_FULL, tuples: Optional[Iterable[Sequence[int]]] = None,
                       bound: Optional[int] = None, max_vertices: Optional[int] = None,
                       workers: int = 1, progress: bool = False) -> Detection:
    """
    Shortest hole recorded over the enumerated (full) or supplied (hinted)
    tuples, or failure. Any recorded hole is a genuine odd hole of G.

    `bound` is a known upper bound on the shortest odd hole length; tuples
    that can only yield longer holes are skipped. Full mode refuses graphs
    with more than `max_vertices` vertices.
    """
    assert mode in LOCATOR_MODES, f"unknown locator mode {mode}"
    if mode == MODE_HINTED:
        recorder = HoleRecorder(G, DetectorTag.GREAT_PYRAMID)
        count = 0
        for raw in tqdm(tuples or (), desc="hinted tuples", disable=not progress):
            count += 1
            t = Tuple12(*raw)
            if not all(G.is_vertex(x) for x in t) or not t.base_ok(G):
                logging.debug(f"skipping hint {tuple(t)}: base is not a triangle on four distinct vertices")
                continue
            hole = locate_from_tuple(G, t)
            if hole is not None:
                recorder.offer(hole.vertices)
        logging.debug(f"find_great_pyramid: consumed {count} hinted tuples")
        return recorder.result()

    limit = great_pyramid_max_n() if max_vertices is None else max_vertices
    n_live = len(G.vertices())
    if n_live > limit:
        raise SizeGuardError("great pyramid full enumeration", n_live, limit)
    triangles = ordered_triangles(G)
    if not triangles:
        return Detection.failure(DetectorTag.GREAT_PYRAMID)
    zsets = sorted(five_tuple_sets(G))
    logging.debug(f"find_great_pyramid: {len(triangles)} ordered triangles, {len(zsets)} distinct Y cores")
    parts = [(G, chunk, zsets, bound, progress and workers <= 1) for chunk in chunked(triangles, workers)]
    return best_of(map_partitions(_search_triangles, parts, workers, desc="great pyramid"),
                   DetectorTag.GREAT_PYRAMID)
