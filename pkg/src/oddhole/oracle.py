"""
Exponential ground truth for desk-scale graphs: shortest odd holes by
induced-path search and by plain subset enumeration, exhaustive pyramid
search, and the brute-force checks the structural property tests rely on.
"""
import itertools
import logging
from typing import *

from .constants import MIN_ODD_HOLE, PYRAMID_SEARCH_MAX_N, SUBSET_ORACLE_MAX_N, oracle_max_n
from .detection import Detection, DetectorTag, HoleRecorder
from .errors import SizeGuardError
from .graph import Graph, Hole, Path, iter_bits, to_mask
from .structure import GreatPyramidWitness, PyramidWitness, is_jewelled, verify_pyramid


def _guard(G: Graph, what: str, bound: int, force: bool) -> None:
    n = len(G.vertices())
    if n > bound and not force:
        raise SizeGuardError(what, n, bound)


def iter_holes(G: Graph, limit: Optional[Callable[[], Optional[int]]] = None) -> Iterator[Tuple[int, ...]]:
    """
    Every hole of G exactly once, as its canonical sequence.

    Grows induced paths s, x1, .. from each start s, using only vertices
    above s, and closes them when the new vertex also sees s. `limit` returns
    the current maximum hole length worth reporting; longer paths are cut.
    """
    adj = G.adj
    for s in iter_bits(G.vertex_mask):
        above = G.vertex_mask & ~((2 << s) - 1)
        path = [s]

        def extend(mask: int) -> Iterator[Tuple[int, ...]]:
            bound = limit() if limit is not None else None
            if bound is not None and len(path) + 1 > bound:
                return
            last = path[-1]
            inner = mask & ~(1 << last)
            for y in iter_bits(adj[last] & above & ~mask):
                seen = adj[y] & inner
                if seen == 0:
                    path.append(y)
                    yield from extend(mask | (1 << y))
                    path.pop()
                elif seen == 1 << s and len(path) >= 3 and path[1] < y:
                    yield tuple(path) + (y,)

        yield from extend(1 << s)


def brute_shortest_odd_hole(G: Graph, force: bool = False, max_vertices: Optional[int] = None) -> Detection:
    """Minimum-length odd hole of G by induced-path search, or failure."""
    _guard(G, "induced-cycle oracle", oracle_max_n() if max_vertices is None else max_vertices, force)
    recorder = HoleRecorder(G, DetectorTag.ORACLE)
    for seq in iter_holes(G, limit=lambda: recorder.best_length):
        if len(seq) % 2 == 1 and len(seq) >= MIN_ODD_HOLE:
            recorder.offer(seq)
    return recorder.result()


def brute_shortest_odd_holes(G: Graph, force: bool = False, max_vertices: Optional[int] = None) -> List[Hole]:
    """All shortest odd holes of G in canonical order."""
    _guard(G, "induced-cycle oracle", oracle_max_n() if max_vertices is None else max_vertices, force)
    best: List[Optional[int]] = [None]
    found: List[Tuple[int, ...]] = []
    for seq in iter_holes(G, limit=lambda: best[0]):
        if len(seq) % 2 == 0 or len(seq) < MIN_ODD_HOLE:
            continue
        if best[0] is None or len(seq) < best[0]:
            best[0] = len(seq)
            found = []
        if len(seq) == best[0]:
            found.append(seq)
    return sorted((Hole(seq).canonical() for seq in found), key=Hole.sort_key)


def _cycle_order(G: Graph, mask: int) -> Optional[Tuple[int, ...]]:
    # the induced subgraph on mask, walked as a cycle, if it is one
    adj = G.adj
    if any((adj[v] & mask).bit_count() != 2 for v in iter_bits(mask)):
        return None
    start = (mask & -mask).bit_length() - 1
    seq = [start]
    prev, cur = None, start
    while True:
        nxt = [x for x in iter_bits(adj[cur] & mask) if x != prev]
        step = nxt[0]
        if step == start:
            break
        seq.append(step)
        prev, cur = cur, step
    return tuple(seq) if len(seq) == mask.bit_count() else None


def brute_subset_odd_hole(G: Graph, force: bool = False) -> Detection:
    """Independent oracle: test every odd vertex subset, smallest size first."""
    _guard(G, "subset oracle", SUBSET_ORACLE_MAX_N, force)
    recorder = HoleRecorder(G, DetectorTag.ORACLE)
    verts = G.vertices()
    for size in range(MIN_ODD_HOLE, len(verts) + 1, 2):
        for subset in itertools.combinations(verts, size):
            seq = _cycle_order(G, to_mask(subset))
            if seq is not None:
                recorder.offer(seq)
        if recorder.best is not None:
            break
    return recorder.result()


def induced_paths(G: Graph, s: int, t: int, allowed_interior: int) -> List[Path]:
    """Every induced s-t path whose interior lies in `allowed_interior`."""
    adj = G.adj
    out: List[Path] = []
    path = [s]

    def extend(mask: int) -> None:
        last = path[-1]
        inner = mask & ~(1 << last)
        for y in iter_bits(adj[last] & ~mask):
            if adj[y] & inner:
                continue
            if y == t:
                out.append(tuple(path) + (t,))
            elif (allowed_interior >> y) & 1:
                path.append(y)
                extend(mask | (1 << y))
                path.pop()

    if s == t:
        return [(s,)]
    extend(1 << s)
    return sorted(out, key=lambda p: (len(p), p))


def induced_paths_through_hole(G: Graph, C: Hole, x: int, y: int) -> List[Path]:
    """Induced x-y paths with interior in V(C)."""
    return induced_paths(G, x, y, C.mask)


def _pyramid_key(w: PyramidWitness) -> FrozenSet[Path]:
    return frozenset(w.paths)


def brute_find_pyramids(G: Graph, force: bool = False) -> List[PyramidWitness]:
    """All pyramids of G, one witness per pyramid with paths ordered by base vertex."""
    _guard(G, "pyramid search", PYRAMID_SEARCH_MAX_N, force)
    adj = G.adj
    out: Dict[FrozenSet[Path], PyramidWitness] = {}
    for b1 in iter_bits(G.vertex_mask):
        for b2 in iter_bits(adj[b1] & ~((2 << b1) - 1)):
            for b3 in iter_bits(adj[b1] & adj[b2] & ~((2 << b2) - 1)):
                base = (b1, b2, b3)
                for a in iter_bits(G.vertex_mask & ~to_mask(base)):
                    per_end = []
                    for i, b in enumerate(base):
                        others = [base[j] for j in range(3) if j != i]
                        interior = G.vertex_mask & ~G.closed_neighborhood(to_mask(others)) & ~(1 << a)
                        per_end.append(induced_paths(G, a, b, interior))
                    for paths in itertools.product(*per_end):
                        w = PyramidWitness(a, base, paths)
                        if verify_pyramid(G, w):
                            out.setdefault(_pyramid_key(w), w)
    return sorted(out.values(), key=lambda w: (w.apex, w.base, w.paths))


def brute_great_pyramids(G: Graph, shortest: Optional[int] = None, force: bool = False) -> List[GreatPyramidWitness]:
    """
    Every pyramid read as a great pyramid: P1 and P2 forming a shortest odd
    hole, P3 strictly shorter than both.
    """
    if shortest is None:
        det = brute_shortest_odd_hole(G, force=force)
        if not det.found:
            return []
        shortest = det.length
    out = []
    for w in brute_find_pyramids(G, force=force):
        for k in range(3):
            i, j = [x for x in range(3) if x != k]
            l = w.lengths
            if l[k] < l[i] and l[k] < l[j] and l[i] + l[j] + 1 == shortest:
                out.append(GreatPyramidWitness(w.apex, (w.base[i], w.base[j], w.base[k]),
                                               (w.paths[i], w.paths[j], w.paths[k])))
    return out


def optimal_great_pyramids(G: Graph, shortest: Optional[int] = None, force: bool = False) -> List[GreatPyramidWitness]:
    """Great pyramids of minimum height."""
    pyramids = brute_great_pyramids(G, shortest, force)
    if not pyramids:
        return []
    lowest = min(w.height for w in pyramids)
    return [w for w in pyramids if w.height == lowest]


def jewelled_shortest_hole_exists(G: Graph, force: bool = False) -> bool:
    return any(is_jewelled(G, C) for C in brute_shortest_odd_holes(G, force=force))


def has_5hole(G: Graph, force: bool = False) -> bool:
    det = brute_shortest_odd_hole(G, force=force)
    return det.found and det.length == 5


def great_pyramid_case_holds(G: Graph, force: bool = False) -> bool:
    """No 5-hole, no jewelled shortest odd hole, and some great pyramid."""
    det = brute_shortest_odd_hole(G, force=force)
    if not det.found or det.length == 5:
        return False
    if jewelled_shortest_hole_exists(G, force=force):
        return False
    found = bool(brute_great_pyramids(G, det.length, force=force))
    logging.debug(f"great pyramid case on {G!r}: {found}")
    return found
