"""
The clean-hole detector and the two cleaning wrappers that make up the
no-great-pyramid branch.

Every hole found in G minus X is an induced cycle of G, so all holes are
validated against the original input and cleaning never yields a false
positive.
"""
import logging
from dataclasses import dataclass
from typing import *

from tqdm import tqdm

from .detection import Detection, DetectorTag, HoleRecorder, best_of
from .graph import Graph, ShortestPathTree, iter_bits, to_mask
from .workers import chunked, map_partitions

PROVENANCE_EMPTY = "empty"
PROVENANCE_HEAVY = "heavy-4-path"
PROVENANCE_TUPLE = "list-5-tuple"
PROVENANCE_SINGLETON = "singleton"


@dataclass(frozen=True)
class CleaningSet:
    vertices: int  # bitset X of vertices to delete
    provenance: str

    def members(self) -> List[int]:
        return list(iter_bits(self.vertices))


def _clean_triples(G: Graph, recorder: HoleRecorder) -> None:
    verts = G.vertices()
    paths: Dict[Tuple[int, int], Tuple[Tuple[int, ...], int]] = {}
    for i, u in enumerate(verts):
        tree = ShortestPathTree(G, u)
        for v in verts[i + 1:]:
            p = tree.path_to(v)
            if p is not None:
                paths[(u, v)] = (p, to_mask(p))
    for i, u in enumerate(verts):
        for j in range(i + 1, len(verts)):
            v = verts[j]
            uv = paths.get((u, v))
            if uv is None:
                continue
            for w in verts[j + 1:]:
                vw, uw = paths.get((v, w)), paths.get((u, w))
                if vw is None or uw is None:
                    continue
                total = len(uv[0]) + len(vw[0]) + len(uw[0]) - 3
                if total < 5 or total % 2 == 0:
                    continue
                best = recorder.best_length
                if best is not None and total > best:
                    continue
                # the three paths may only meet at u, v, w
                if uv[1] & vw[1] != 1 << v or vw[1] & uw[1] != 1 << w or uv[1] & uw[1] != 1 << u:
                    continue
                recorder.offer(uv[0] + vw[0][1:] + tuple(reversed(uw[0]))[1:-1])


def test_clean(G: Graph, original: Optional[Graph] = None) -> Detection:
    """
    Union-of-three-shortest-paths search. Finds a shortest odd hole whenever G
    has no jewelled shortest odd hole, no great pyramid, and some shortest odd
    hole is clean; otherwise any recorded hole is still a genuine odd hole.

    `original` is the graph holes are validated against when G is a cleaned
    copy of it.
    """
    recorder = HoleRecorder(original if original is not None else G, DetectorTag.NO_GREAT_PYRAMID)
    _clean_triples(G, recorder)
    return recorder.result()


def _clean_each(G: Graph, masks: Sequence[int]) -> Detection:
    recorder = HoleRecorder(G, DetectorTag.NO_GREAT_PYRAMID)
    for mask in masks:
        _clean_triples(G.without(mask), recorder)
    return recorder.result()


def heavy_cleaning_sets(G: Graph) -> List[CleaningSet]:
    """For every induced path c1-c2-c3-c4, the vertices other than c1..c4 adjacent to c2 or c3."""
    adj = G.adj
    seen: Set[int] = set()
    out: List[CleaningSet] = []
    for c2 in iter_bits(G.vertex_mask):
        for c3 in iter_bits(adj[c2] & ~((2 << c2) - 1)):
            near2 = adj[c2] | (1 << c2)
            near3 = adj[c3] | (1 << c3)
            for c1 in iter_bits(adj[c2] & ~near3):
                for c4 in iter_bits(adj[c3] & ~near2 & ~adj[c1] & ~(1 << c1)):
                    X = (adj[c2] | adj[c3]) & ~to_mask((c1, c2, c3, c4))
                    if X not in seen:
                        seen.add(X)
                        out.append(CleaningSet(X, PROVENANCE_HEAVY))
    return out


def test_cleanable(G: Graph, workers: int = 1, progress: bool = False) -> Detection:
    """
    Run test_clean on G minus X for the X of every induced 4-path. Finds a
    shortest odd hole when G has no 5-hole, no jewelled shortest odd hole, no
    great pyramid, and a heavy-cleanable shortest odd hole.
    """
    sets = heavy_cleaning_sets(G)
    if not sets:
        # no induced 4-path at all
        return test_clean(G)
    masks = [cs.vertices for cs in sets]
    logging.debug(f"test_cleanable: {len(masks)} distinct cleaning sets")
    parts = [(G, chunk) for chunk in chunked(masks, workers)]
    return best_of(map_partitions(_clean_each, parts, workers, desc="cleanable", progress=progress),
                   DetectorTag.NO_GREAT_PYRAMID)


def five_tuple_sets(G: Graph) -> Set[int]:
    """
    Every N[{v, v1, v2}] minus {v1, v2, v3, v4} with v1v2 an edge, v adjacent
    to v1 or v2, and v3, v4 in N[{v, v1, v2}].
    """
    adj = G.adj
    out: Set[int] = set()
    for v1 in iter_bits(G.vertex_mask):
        for v2 in iter_bits(adj[v1] & ~((2 << v1) - 1)):
            for v in iter_bits(adj[v1] | adj[v2]):
                base = G.closed_neighborhood((1 << v) | (1 << v1) | (1 << v2)) & ~(1 << v1) & ~(1 << v2)
                # v3, v4 strip at most two further members of the closed neighbourhood
                members = list(iter_bits(base))
                out.add(base)
                for i, x in enumerate(members):
                    out.add(base & ~(1 << x))
                    for y in members[i + 1:]:
                        out.add(base & ~(1 << x) & ~(1 << y))
    return out


def cleaning_list(G: Graph) -> List[CleaningSet]:
    """
    The empty set, then every five-tuple set (see five_tuple_sets), then
    N[w] for every vertex w; duplicates are dropped, keeping the first
    provenance.
    """
    out = [CleaningSet(0, PROVENANCE_EMPTY)]
    seen = {0}
    for mask in sorted(five_tuple_sets(G)):
        if mask not in seen:
            seen.add(mask)
            out.append(CleaningSet(mask, PROVENANCE_TUPLE))
    for w in iter_bits(G.vertex_mask):
        mask = G.closed_neighborhood(1 << w)
        if mask not in seen:
            seen.add(mask)
            out.append(CleaningSet(mask, PROVENANCE_SINGLETON))
    return out


def no_heavy_clean(G: Graph, workers: int = 1, progress: bool = False) -> Detection:
    """Run test_clean on G minus X for every X on the cleaning list."""
    masks = [cs.vertices for cs in cleaning_list(G)]
    logging.debug(f"no_heavy_clean: cleaning list has {len(masks)} distinct sets")
    parts = [(G, chunk) for chunk in chunked(masks, max(workers, 1))]
    if workers <= 1 and progress:
        recorder = HoleRecorder(G, DetectorTag.NO_GREAT_PYRAMID)
        for mask in tqdm(masks, desc="cleaning list"):
            _clean_triples(G.without(mask), recorder)
        return recorder.result()
    return best_of(map_partitions(_clean_each, parts, workers, desc="cleaning list", progress=progress),
                   DetectorTag.NO_GREAT_PYRAMID)


def no_great_pyramid_solver(G: Graph, workers: int = 1, progress: bool = False) -> Detection:
    """
    Shortest of test_cleanable and no_heavy_clean. A shortest odd hole whenever
    G has an odd hole but no 5-hole, no jewelled shortest odd hole and no great
    pyramid.
    """
    return best_of([test_cleanable(G, workers, progress), no_heavy_clean(G, workers, progress)],
                   DetectorTag.NO_GREAT_PYRAMID)
