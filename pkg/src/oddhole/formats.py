"""
Graph, witness and hint-tuple I/O.

Edge lists are the native format: one whitespace-separated `u v` pair per
line, 0-based, `#` starts a comment, and an optional `# n=<N>` header fixes
the vertex count. DIMACS (`p edge N M` / `e u v`, 1-based) and graph6 are
read-only.
"""
import json
import logging
import os
import re
from typing import *

import networkx as nx

from .errors import GraphFormatError, WitnessSchemaError
from .graph import Graph, Hole
from .pyramid_locator import Tuple12
from .structure import GreatPyramidWitness, JewelWitness, PyramidWitness

GRAPH_FORMATS = ("edgelist", "dimacs", "graph6")
WITNESS_TYPES = ("pyramid", "great_pyramid", "jewel", "hole")

_HEADER = re.compile(r"^#\s*n\s*=\s*(\d+)\s*$")


def parse_edgelist(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        header = _HEADER.match(raw.strip())
        if header:
            n = int(header.group(1))
            continue
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: vertex ids must be integers, got {raw.strip()!r}") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id in {raw.strip()!r}")
        edges.append((u, v))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(n, edges)


def parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p" and len(parts) >= 3:
            fields = parts[2:3]
        elif parts[0] == "e" and len(parts) >= 3:
            fields = parts[1:3]
        else:
            raise GraphFormatError(f"line {lineno}: unrecognized DIMACS line {raw.strip()!r}")
        try:
            values = [int(x) for x in fields]
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer field in {raw.strip()!r}") from None
        if parts[0] == "p":
            n = values[0]
        else:
            edges.append((values[0] - 1, values[1] - 1))
    if n is None:
        raise GraphFormatError("DIMACS input has no 'p edge N M' line")
    return Graph.from_edges(n, edges)


def parse_graph6(text: str) -> Graph:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise GraphFormatError("empty graph6 input")
    if len(lines) > 1:
        logging.warning(f"graph6 input holds {len(lines)} graphs; reading the first")
    try:
        return Graph.from_networkx(nx.from_graph6_bytes(lines[0].encode("ascii")))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as e:
        raise GraphFormatError(f"invalid graph6 data: {e}") from None


_PARSERS = {"edgelist": parse_edgelist, "dimacs": parse_dimacs, "graph6": parse_graph6}


def parse_graph(text: str, fmt: str = "edgelist") -> Graph:
    if fmt not in _PARSERS:
        raise GraphFormatError(f"unknown graph format {fmt!r}; expected one of {', '.join(GRAPH_FORMATS)}")
    return _PARSERS[fmt](text)


def read_graph(path: str, fmt: str = "edgelist") -> Graph:
    with open(path, "r") as f:
        G = parse_graph(f.read(), fmt)
    logging.debug(f"read {G!r} from {path} ({fmt})")
    return G


def format_edgelist(G: Graph) -> str:
    lines = [f"# n={G.n}"] + [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def write_edgelist(G: Graph, path: str) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w") as f:
        f.write(format_edgelist(G))


def witness_to_dict(w: Union[PyramidWitness, JewelWitness, Hole]) -> Dict[str, Any]:
    if isinstance(w, Hole):
        return {"type": "hole", "vertices": list(w.vertices)}
    if isinstance(w, JewelWitness):
        return {"type": "jewel", "ring": list(w.ring), "path": list(w.path)}
    kind = "great_pyramid" if isinstance(w, GreatPyramidWitness) else "pyramid"
    return {"type": kind, "apex": w.apex, "base": list(w.base), "paths": [list(p) for p in w.paths]}


def _int_list(d: Dict[str, Any], key: str, length: Optional[int] = None) -> Tuple[int, ...]:
    value = d.get(key)
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise WitnessSchemaError(f"witness field {key!r} must be a list of integers")
    if length is not None and len(value) != length:
        raise WitnessSchemaError(f"witness field {key!r} must have {length} entries, got {len(value)}")
    return tuple(value)


def witness_from_dict(d: Dict[str, Any]) -> Union[PyramidWitness, JewelWitness, Hole]:
    if not isinstance(d, dict) or d.get("type") not in WITNESS_TYPES:
        raise WitnessSchemaError(f"witness must be an object with type in {WITNESS_TYPES}")
    kind = d["type"]
    if kind == "hole":
        return Hole(_int_list(d, "vertices"))
    if kind == "jewel":
        return JewelWitness(_int_list(d, "ring", 5), _int_list(d, "path"))
    apex = d.get("apex")
    if not isinstance(apex, int) or isinstance(apex, bool):
        raise WitnessSchemaError("pyramid witness needs an integer 'apex'")
    paths = d.get("paths")
    if not isinstance(paths, list) or len(paths) != 3:
        raise WitnessSchemaError("pyramid witness needs exactly three 'paths'")
    paths = tuple(_int_list({"p": p}, "p") for p in paths)
    cls = GreatPyramidWitness if kind == "great_pyramid" else PyramidWitness
    return cls(apex, _int_list(d, "base", 3), paths)


def load_witness(path: str) -> Tuple[Union[PyramidWitness, JewelWitness, Hole], Dict[str, Any]]:
    """The witness plus the raw document, which may carry extra sidecar keys."""
    with open(path, "r") as f:
        try:
            doc = json.load(f)
        except json.JSONDecodeError as e:
            raise WitnessSchemaError(f"{path}: not valid JSON ({e})") from None
    return witness_from_dict(doc), doc


def save_json(doc: Dict[str, Any], path: str) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w") as f:
        json.dump(doc, f, indent=2, sort_keys=True)


def parse_hints(text: str) -> List[Tuple12]:
    """JSON lines, each an array of twelve vertex ids; blank and '#' lines are skipped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            value = json.loads(line)
        except json.JSONDecodeError:
            raise WitnessSchemaError(f"hint line {lineno}: not valid JSON") from None
        if not isinstance(value, list) or len(value) != 12 or not all(isinstance(x, int) for x in value):
            raise WitnessSchemaError(f"hint line {lineno}: expected an array of 12 integers")
        out.append(Tuple12(*value))
    return out


def read_hints(path: str) -> List[Tuple12]:
    with open(path, "r") as f:
        return parse_hints(f.read())


def format_hints(tuples: Iterable[Sequence[int]]) -> str:
    return "".join(json.dumps(list(t)) + "\n" for t in tuples)
