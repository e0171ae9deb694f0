"""
Seeded instance families for tests and the `gen` command.

Every planted instance is checked against the structure validators before it
is returned; planted pyramids are also checked against the oracle.
"""
import logging
from dataclasses import dataclass, field
from typing import *

import networkx as nx
import numpy as np

from .errors import InstanceParameterError
from .graph import Graph, Hole
from .pyramid_locator import Tuple12, witness_tuple
from .structure import GreatPyramidWitness, JewelWitness, verify_great_pyramid, verify_jewel

FAMILIES = ("cycle", "planted_pyramid", "planted_jewel", "random", "planted_major", "petersen")

# ambient neighbour patterns on a hole, as offsets from a random position
_AMBIENT_PATTERNS = ((0,), (0, 1), (0, 2))
_PLANT_ATTEMPTS = 50


@dataclass(frozen=True)
class InstanceSpec:
    family: str
    args: Tuple[float, ...] = ()
    ambient: int = 0
    seed: int = 0
    patterns: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "args", tuple(self.args))
        object.__setattr__(self, "patterns", tuple(tuple(p) for p in self.patterns))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "family": self.family,
            "args": list(self.args),
            "ambient": self.ambient,
            "seed": self.seed,
            "patterns": [list(p) for p in self.patterns],
        }


@dataclass
class PlantedInstance:
    spec: InstanceSpec
    graph: Graph
    witness: Union[GreatPyramidWitness, JewelWitness, Hole, None] = None
    hint: Optional[Tuple12] = None
    expected_min: Optional[int] = None
    notes: Dict[str, Any] = field(default_factory=dict)


def _int_args(spec: InstanceSpec, count: int) -> Tuple[int, ...]:
    if len(spec.args) != count:
        raise InstanceParameterError(f"{spec.family} takes {count} arguments, got {len(spec.args)}")
    out = tuple(int(x) for x in spec.args)
    if any(int(x) != x for x in spec.args):
        raise InstanceParameterError(f"{spec.family} arguments must be integers, got {spec.args}")
    return out


def _pendants(rng: np.random.Generator, n: int, anchors: Sequence[int], count: int) -> List[Tuple[int, int]]:
    # pendant vertices never lie on a hole
    return [(n + i, int(anchors[rng.integers(len(anchors))])) for i in range(count)]


def cycle_instance(spec: InstanceSpec) -> PlantedInstance:
    (k,) = _int_args(spec, 1)
    if k < 3:
        raise InstanceParameterError(f"cycle length must be at least 3, got {k}")
    rng = np.random.default_rng(spec.seed)
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += _pendants(rng, k, range(k), spec.ambient)
    G = Graph.from_edges(k + spec.ambient, edges)
    hole = Hole(tuple(range(k))) if k >= 4 else None
    expected = k if k % 2 == 1 and k >= 5 else None
    return PlantedInstance(spec, G, hole, expected_min=expected)


def _pyramid_layout(l1: int, l2: int, l3: int) -> Tuple[int, List[List[int]], List[Tuple[int, int]]]:
    paths = []
    next_id = 1
    for ell in (l1, l2, l3):
        paths.append([0] + list(range(next_id, next_id + ell)))
        next_id += ell
    edges = [(p[i], p[i + 1]) for p in paths for i in range(len(p) - 1)]
    b1, b2, b3 = (p[-1] for p in paths)
    edges += [(b1, b2), (b2, b3), (b1, b3)]
    return next_id, paths, edges


def planted_pyramid_instance(spec: InstanceSpec) -> PlantedInstance:
    """
    Apex 0 joined to a base triangle by paths of lengths l1, l2, l3, plus
    `ambient` pairwise nonadjacent vertices whose neighbours lie on at most
    three consecutive vertices of the hole P1 + P2.
    """
    from .oracle import brute_shortest_odd_hole

    l1, l2, l3 = _int_args(spec, 3)
    if l3 < 1 or l3 >= l1 or l3 >= l2:
        raise InstanceParameterError(f"height {l3} must be positive and strictly below {l1} and {l2}")
    if (l1 - l2) % 2 != 0:
        raise InstanceParameterError(f"l1={l1} and l2={l2} must have the same parity")
    if (l1 - l3) % 2 == 0:
        raise InstanceParameterError(f"l3={l3} must have the opposite parity of l1={l1}")
    n, paths, edges = _pyramid_layout(l1, l2, l3)
    witness = GreatPyramidWitness(0, tuple(p[-1] for p in paths), tuple(tuple(p) for p in paths))
    hole = witness.hole.vertices
    target = l1 + l2 + 1
    rng = np.random.default_rng(spec.seed)
    for attempt in range(_PLANT_ATTEMPTS):
        extra = []
        for i in range(spec.ambient):
            start = int(rng.integers(len(hole)))
            offsets = _AMBIENT_PATTERNS[int(rng.integers(len(_AMBIENT_PATTERNS)))]
            extra += [(n + i, hole[(start + d) % len(hole)]) for d in offsets]
        G = Graph.from_edges(n + spec.ambient, edges + extra)
        det = brute_shortest_odd_hole(G, force=True)
        if det.length == target and verify_great_pyramid(G, witness, target):
            return PlantedInstance(spec, G, witness, hint=witness_tuple(witness), expected_min=target,
                                   notes={"attempts": attempt + 1})
        logging.debug(f"planted pyramid attempt {attempt + 1}: ambient vertices changed the minimum, redrawing")
    raise InstanceParameterError(f"could not plant {spec.ambient} ambient vertices around pyramid {(l1, l2, l3)}")


def planted_jewel_instance(spec: InstanceSpec) -> PlantedInstance:
    """
    Ring v1..v5 (ids 0..4) with v5 also adjacent to v2 and v3, and a v1-v4
    path of length p_len; `ambient` pendant vertices hang off random vertices.
    """
    (p_len,) = _int_args(spec, 1)
    if p_len < 2:
        raise InstanceParameterError(f"jewel path length must be at least 2, got {p_len}")
    v1, v2, v3, v4, v5 = range(5)
    edges = [(v1, v2), (v2, v3), (v3, v4), (v4, v5), (v5, v1), (v5, v2), (v5, v3)]
    path = [v1] + list(range(5, 5 + p_len - 1)) + [v4]
    edges += [(path[i], path[i + 1]) for i in range(len(path) - 1)]
    n = 5 + p_len - 1
    rng = np.random.default_rng(spec.seed)
    edges += _pendants(rng, n, range(n), spec.ambient)
    G = Graph.from_edges(n + spec.ambient, edges)
    witness = JewelWitness((v1, v2, v3, v4, v5), tuple(path))
    verdict = verify_jewel(G, witness)
    assert verdict, f"planted jewel failed validation: {verdict.reason}"
    expected = p_len + 2 if p_len % 2 == 1 else p_len + 3
    return PlantedInstance(spec, G, witness, expected_min=expected)


def random_instance(spec: InstanceSpec) -> PlantedInstance:
    if len(spec.args) != 2:
        raise InstanceParameterError(f"random takes n and p, got {spec.args}")
    n, p = int(spec.args[0]), float(spec.args[1])
    if n < 0 or not 0.0 <= p <= 1.0:
        raise InstanceParameterError(f"invalid random parameters n={n}, p={p}")
    rng = np.random.default_rng(spec.seed)
    draws = rng.random((n, n))
    rows, cols = np.nonzero(np.triu(draws < p, k=1))
    G = Graph.from_edges(n, zip(rows.tolist(), cols.tolist()))
    return PlantedInstance(spec, G)


def planted_major_instance(spec: InstanceSpec) -> PlantedInstance:
    """A hole 0..k-1 plus one extra vertex per pattern, adjacent to the listed hole positions."""
    (k,) = _int_args(spec, 1)
    if k < 4:
        raise InstanceParameterError(f"hole length must be at least 4, got {k}")
    edges = [(i, (i + 1) % k) for i in range(k)]
    for j, pattern in enumerate(spec.patterns):
        if not pattern or any(not 0 <= pos < k for pos in pattern) or len(set(pattern)) != len(pattern):
            raise InstanceParameterError(f"pattern {pattern} must list distinct hole positions in [0, {k})")
        edges += [(k + j, pos) for pos in pattern]
    G = Graph.from_edges(k + len(spec.patterns), edges)
    return PlantedInstance(spec, G, Hole(tuple(range(k))))


def petersen_instance(spec: InstanceSpec) -> PlantedInstance:
    return PlantedInstance(spec, Graph.from_networkx(nx.petersen_graph()), expected_min=5)


_BUILDERS: Dict[str, Callable[[InstanceSpec], PlantedInstance]] = {
    "cycle": cycle_instance,
    "planted_pyramid": planted_pyramid_instance,
    "planted_jewel": planted_jewel_instance,
    "random": random_instance,
    "planted_major": planted_major_instance,
    "petersen": petersen_instance,
}


def plant(spec: InstanceSpec) -> PlantedInstance:
    if spec.family not in _BUILDERS:
        raise InstanceParameterError(f"unknown family {spec.family!r}; expected one of {', '.join(FAMILIES)}")
    if spec.ambient < 0:
        raise InstanceParameterError(f"ambient count must be non-negative, got {spec.ambient}")
    return _BUILDERS[spec.family](spec)


def generate(spec: InstanceSpec) -> Graph:
    """Pure function of spec: the same spec always yields the same edge list."""
    return plant(spec).graph
