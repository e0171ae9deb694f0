"""
Structural predicates for the configurations the detectors reason about:
C-major vertices, shortcuts, pyramids, jewels, jewelled holes and great pyramids.

Validators return a Verdict, which is truthy iff the configuration is valid and
otherwise carries the first check that failed.
"""
from dataclasses import dataclass
from typing import *

from .errors import InvalidVertexError
from .graph import Graph, Hole, Path, hole_distance, is_hole, is_path, iter_bits, shortest_path_avoiding, to_mask


@dataclass(frozen=True)
class MajorClass:
    major: bool
    neighbor_count: int
    big: bool = False

    @classmethod
    def not_major(cls, neighbor_count: int) -> "MajorClass":
        return cls(False, neighbor_count, False)

    @classmethod
    def of(cls, neighbor_count: int) -> "MajorClass":
        return cls(True, neighbor_count, neighbor_count >= 4)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


VALID = Verdict(True)

# first-failure reason codes
REASON_VERTICES = "vertices"
REASON_PATH = "constituent path"
REASON_DISJOINT = "disjointness"
REASON_LENGTHS = "path lengths"
REASON_TRIANGLE = "base triangle"
REASON_CROSS = "cross edges"
REASON_RING = "ring"
REASON_INTERIOR = "interior"
REASON_HOLE = "not a hole"
REASON_EVEN = "even length"
REASON_HOLE_LENGTH = "hole length"
REASON_HEIGHT = "height"


@dataclass(frozen=True)
class PyramidWitness:
    apex: int
    base: Tuple[int, int, int]
    paths: Tuple[Path, Path, Path]

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", tuple(self.base))
        object.__setattr__(self, "paths", tuple(tuple(p) for p in self.paths))

    @property
    def lengths(self) -> Tuple[int, ...]:
        return tuple(len(p) - 1 for p in self.paths)


@dataclass(frozen=True)
class GreatPyramidWitness(PyramidWitness):
    """A pyramid read with P1, P2 the long paths and P3 the short one."""

    @property
    def hole(self) -> Hole:
        p1, p2, _ = self.paths
        return Hole(p1 + tuple(reversed(p2))[:-1])

    @property
    def heart(self) -> Tuple[int, ...]:
        return self.paths[2][1:]

    @property
    def height(self) -> int:
        return len(self.paths[2]) - 1


@dataclass(frozen=True)
class JewelWitness:
    ring: Tuple[int, int, int, int, int]
    path: Path

    def __post_init__(self) -> None:
        object.__setattr__(self, "ring", tuple(self.ring))
        object.__setattr__(self, "path", tuple(self.path))


def classify_major(G: Graph, C: Hole, v: int) -> MajorClass:
    """
    v is C-major when no three consecutive hole vertices contain all of its
    neighbours on C; a major vertex is big when it has at least four of them.
    """
    G.check_vertex(v)
    if v in C:
        raise InvalidVertexError(f"vertex {v} lies on the hole")
    m = C.length
    positions = {i for i, c in enumerate(C.vertices) if G.has_edge(v, c)}
    if len(positions) <= 1:
        return MajorClass.not_major(len(positions))
    for i in range(m):
        if positions <= {i, (i + 1) % m, (i + 2) % m}:
            return MajorClass.not_major(len(positions))
    return MajorClass.of(len(positions))


def major_vertices(G: Graph, C: Hole, big_only: bool = False) -> int:
    mask = 0
    for v in iter_bits(G.vertex_mask & ~C.mask):
        cls = classify_major(G, C, v)
        if cls.major and (cls.big or not big_only):
            mask |= 1 << v
    return mask


def _check_hole_ends(G: Graph, C: Hole, u: int, v: int) -> None:
    if u not in C or v not in C:
        raise InvalidVertexError(f"shortcut ends {u}, {v} must lie on the hole")
    if u == v or G.has_edge(u, v):
        raise InvalidVertexError(f"shortcut ends {u}, {v} must be distinct and nonadjacent")


def is_shortcut(G: Graph, C: Hole, P: Sequence[int]) -> bool:
    path = tuple(P)
    if len(path) < 2:
        raise InvalidVertexError(f"a shortcut needs two distinct ends, got {path}")
    u, v = path[0], path[-1]
    _check_hole_ends(G, C, u, v)
    if not is_path(G, path):
        return False
    if len(path) - 1 >= hole_distance(C, u, v):
        return False
    for x in path:
        if x not in C and classify_major(G, C, x).big:
            return False
    return True


def find_shortcut(G: Graph, C: Hole) -> Optional[Path]:
    """A shortest shortcut for C, or None when C has none."""
    bigs = major_vertices(G, C, big_only=True)
    best = None
    verts = C.vertices
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if G.has_edge(u, v):
                continue
            path = shortest_path_avoiding(G, u, v, bigs)
            if path is None or len(path) - 1 >= hole_distance(C, u, v):
                continue
            if best is None or len(path) < len(best):
                best = path
    return best


def verify_pyramid(G: Graph, w: PyramidWitness) -> Verdict:
    a = w.apex
    ends = (a,) + w.base
    if len(w.base) != 3 or len(w.paths) != 3:
        return Verdict(False, REASON_VERTICES)
    if not all(G.is_vertex(x) for x in ends) or len(set(ends)) != 4:
        return Verdict(False, REASON_VERTICES)
    for b, p in zip(w.base, w.paths):
        if len(p) < 2 or p[0] != a or p[-1] != b or not is_path(G, p, induced=True):
            return Verdict(False, REASON_PATH)
    tails = [to_mask(p[1:]) for p in w.paths]
    if tails[0] & tails[1] or tails[0] & tails[2] or tails[1] & tails[2]:
        return Verdict(False, REASON_DISJOINT)
    if sum(1 for ell in w.lengths if ell >= 2) < 2:
        return Verdict(False, REASON_LENGTHS)
    b1, b2, b3 = w.base
    if not (G.has_edge(b1, b2) and G.has_edge(b2, b3) and G.has_edge(b1, b3)):
        return Verdict(False, REASON_TRIANGLE)
    for i in range(3):
        for j in range(i + 1, 3):
            for x in w.paths[i][1:]:
                allowed = (1 << w.base[j]) if x == w.base[i] else 0
                if G.adj[x] & tails[j] & ~allowed:
                    return Verdict(False, REASON_CROSS)
    return VALID


def verify_jewel(G: Graph, w: JewelWitness) -> Verdict:
    ring = w.ring
    if len(ring) != 5 or len(set(ring)) != 5 or not all(G.is_vertex(x) for x in ring):
        return Verdict(False, REASON_VERTICES)
    v1, v2, v3, v4, v5 = ring
    edges = ((v1, v2), (v2, v3), (v3, v4), (v4, v5), (v5, v1))
    nonedges = ((v1, v3), (v2, v4), (v1, v4))
    if not all(G.has_edge(x, y) for x, y in edges) or any(G.has_edge(x, y) for x, y in nonedges):
        return Verdict(False, REASON_RING)
    path = w.path
    if len(path) < 2 or path[0] != v1 or path[-1] != v4 or not is_path(G, path):
        return Verdict(False, REASON_PATH)
    interior = to_mask(path[1:-1])
    for x in (v2, v3, v5):
        if (interior >> x) & 1 or G.adj[x] & interior:
            return Verdict(False, REASON_INTERIOR)
    return VALID


def is_jewelled(G: Graph, C: Hole) -> bool:
    """
    C carries a jewel either as a 4-vertex subpath c1-c2-c4-c5 with some c3
    adjacent to c1 and c5, or as a 3-vertex subpath c1-c3-c5 with c2, c4 off C
    such that c1-c2-c4-c5 is an induced path.
    """
    verts = C.vertices
    m = len(verts)
    cmask = C.mask
    adj = G.adj
    for i in range(m):
        c1, c5 = verts[i], verts[(i + 3) % m]
        if adj[c1] & adj[c5]:
            return True
    for i in range(m):
        c1, c5 = verts[i], verts[(i + 2) % m]
        for c2 in iter_bits(adj[c1] & ~cmask & ~adj[c5]):
            if adj[c2] & adj[c5] & ~cmask & ~adj[c1] & ~(1 << c1):
                return True
    return False


def verify_great_pyramid(G: Graph, w: PyramidWitness, shortest_odd_hole_length: int) -> Verdict:
    verdict = verify_pyramid(G, w)
    if not verdict:
        return verdict
    l1, l2, l3 = w.lengths
    hole_length = l1 + l2 + 1
    if hole_length % 2 == 0:
        return Verdict(False, REASON_EVEN)
    if hole_length != shortest_odd_hole_length:
        return Verdict(False, REASON_HOLE_LENGTH)
    if not (l3 < l1 and l3 < l2):
        return Verdict(False, REASON_HEIGHT)
    return VALID


def pyramid_major_type(G: Graph, w: PyramidWitness, v: int) -> Optional[Tuple[int, int]]:
    """
    The (i, j) type of v relative to the pyramid, 1-based: at least three
    neighbours in P_i minus the apex, exactly two adjacent neighbours in P_j,
    none in P_k minus the apex.
    """
    a = w.apex
    full = [to_mask(p) for p in w.paths]
    tails = [mask & ~(1 << a) for mask in full]
    row = G.adj[v]
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            k = 3 - i - j
            if (row & tails[i]).bit_count() < 3 or row & tails[k]:
                continue
            pair = list(iter_bits(row & full[j]))
            if len(pair) == 2 and G.has_edge(*pair):
                return (i + 1, j + 1)
    return None


def verify_odd_hole(G: Graph, seq: Sequence[int]) -> Verdict:
    if not is_hole(G, seq):
        return Verdict(False, REASON_HOLE)
    if len(tuple(seq)) % 2 == 0:
        return Verdict(False, REASON_EVEN)
    return VALID
