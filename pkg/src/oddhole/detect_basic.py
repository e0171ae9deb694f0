"""
The two cheap detectors: exhaustive 5-hole search and the shortest jewelled odd hole search.
"""
import logging
from typing import *

from tqdm import tqdm

from .detection import Detection, DetectorTag, HoleRecorder
from .graph import Graph, ShortestPathTree, iter_bits, lsb


def _above(v: int) -> int:
    # bitset of ids strictly greater than v
    return ~((2 << v) - 1)


def find_5hole(G: Graph) -> Detection:
    """
    First 5-hole in lexicographic order of its canonical sequence (c1 minimum,
    c2 < c5), or failure. A 5-hole is always a shortest odd hole.

    Walks c1-c2-c3-c4 along edges and intersects neighbourhoods for c5 instead
    of testing raw 5-tuples.
    """
    recorder = HoleRecorder(G, DetectorTag.FIVE_HOLE)
    adj = G.adj
    for c1 in iter_bits(G.vertex_mask):
        above = G.vertex_mask & _above(c1)
        n1 = adj[c1]
        for c2 in iter_bits(n1 & above):
            for c3 in iter_bits(adj[c2] & above & ~n1):
                for c4 in iter_bits(adj[c3] & above & ~n1 & ~adj[c2] & ~(1 << c2)):
                    closers = adj[c4] & n1 & _above(c2) & ~adj[c2] & ~adj[c3]
                    if closers and recorder.offer((c1, c2, c3, c4, lsb(closers))):
                        return recorder.result()
    return recorder.result()


def jewel_closures(c1: int, c2: int, c3: int, c4: int, c5: int, path: Sequence[int]) -> List[Tuple[int, ...]]:
    """
    The two cycles closing a c1-c5 path: through c2, c4 (length 3 + |P|) and
    through c3 (length 2 + |P|). Exactly one of them has odd length.
    """
    back = tuple(reversed(path[1:-1]))
    return [(c1, c2, c4, c5) + back, (c1, c3, c5) + back]


def find_jewelled(G: Graph, progress: bool = False) -> Detection:
    """
    Shortest jewelled odd hole, or failure.

    For every c1-c2-c4-c5 induced path and c3 adjacent to c1 and c5, take the
    canonical shortest c1-c5 path whose interior avoids N[{c2, c3, c4}] and
    record whichever closure is an odd hole. If some shortest odd hole of G is
    jewelled, the recorded minimum is the odd hole minimum.
    """
    recorder = HoleRecorder(G, DetectorTag.JEWEL)
    adj = G.adj
    live = G.vertex_mask
    for c2 in tqdm(list(iter_bits(live)), desc="jewel", disable=not progress):
        for c1 in iter_bits(adj[c2]):
            closed1 = adj[c1] | (1 << c1)
            for c4 in iter_bits(adj[c2] & ~closed1):
                closed2 = adj[c2] | (1 << c2)
                for c5 in iter_bits(adj[c4] & live & ~closed1 & ~closed2):
                    for c3 in iter_bits(adj[c1] & adj[c5]):
                        forbidden = G.closed_neighborhood((1 << c2) | (1 << c3) | (1 << c4))
                        path = ShortestPathTree(G, c1, forbidden).path_to(c5)
                        if path is None:
                            continue
                        for candidate in jewel_closures(c1, c2, c3, c4, c5, path):
                            recorder.offer(candidate)
    result = recorder.result()
    if result.found:
        logging.debug(f"find_jewelled: shortest jewelled odd hole has length {result.length}")
    return result
