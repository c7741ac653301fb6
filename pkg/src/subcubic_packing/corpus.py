"""Named graphs and the two persistence formats (EDGELIST text, graph6)."""

from __future__ import annotations

import itertools
import re

from .graph import Graph, GraphError

NAMES = ("k4", "k4_subdivided", "k33", "k33_subdivided", "petersen", "tietze",
         "wagner", "prism3", "cycle(n)", "path(n)")


class ParseError(ValueError):
    """Malformed graph input; ``position`` is a 1-based line (EDGELIST) or byte (graph6)."""

    def __init__(self, message: str, position: int | None = None):
        where = f" at {position}" if position is not None else ""
        super().__init__(message + where)
        self.position = position


def petersen() -> Graph:
    # Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint
    subsets = list(itertools.combinations(range(5), 2))
    edges = [(i, j) for i, j in itertools.combinations(range(10), 2)
             if not set(subsets[i]) & set(subsets[j])]
    return Graph(10, edges)


def tietze() -> Graph:
    """Petersen with vertex 0 blown up into a triangle.

    Petersen vertices 1..9 become 0..8; the triangle is 9, 10, 11, with 9+i
    taking over the i-th neighbour of the old vertex 0.
    """
    p = petersen()
    nbrs = sorted(p.neighbors[0])
    edges = []
    for u, v in p.edges:
        if 0 in (u, v):
            continue
        edges.append((u - 1, v - 1))
    for i, w in enumerate(nbrs):
        edges.append((w - 1, 9 + i))
    edges += [(9, 10), (10, 11), (9, 11)]
    return Graph(12, edges)


def wagner() -> Graph:
    return Graph(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])


def k4() -> Graph:
    return Graph(4, list(itertools.combinations(range(4), 2)))


def k4_subdivided() -> Graph:
    # edge 01 replaced by 0-4-1
    edges = [(0, 4), (4, 1)] + [e for e in itertools.combinations(range(4), 2) if e != (0, 1)]
    return Graph(5, edges)


def k33() -> Graph:
    return Graph(6, [(a, b) for a in range(3) for b in range(3, 6)])


def k33_subdivided() -> Graph:
    # edge 03 replaced by 0-6-3
    edges = [(0, 6), (6, 3)] + [(a, b) for a in range(3) for b in range(3, 6) if (a, b) != (0, 3)]
    return Graph(7, edges)


def prism3() -> Graph:
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle(n) needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    if n < 1:
        raise GraphError("path(n) needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


_FIXED = {
    "k4": k4,
    "k4_subdivided": k4_subdivided,
    "k33": k33,
    "k33_subdivided": k33_subdivided,
    "petersen": petersen,
    "tietze": tietze,
    "wagner": wagner,
    "prism3": prism3,
}
_PARAM = re.compile(r"^(cycle|path)\s*\(?\s*(\d+)\s*\)?$")


def named(name: str) -> Graph:
    """Canonical graph for ``name``; ``cycle(n)``/``path(n)`` (or ``cycle6``) take a size."""
    key = name.strip().lower().replace("-", "_")
    if key in _FIXED:
        return _FIXED[key]()
    m = _PARAM.match(key)
    if m:
        return (cycle if m.group(1) == "cycle" else path)(int(m.group(2)))
    raise GraphError(f"unknown named graph {name!r}; known: {', '.join(NAMES)}")


# ---------------------------------------------------------------------------
# EDGELIST


def write_edgelist(g: Graph) -> bytes:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return ("\n".join(lines) + "\n").encode()


def read_edgelist(data: bytes | str) -> Graph:
    text = data.decode() if isinstance(data, bytes) else data
    header = None
    edges = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("negative header value", lineno)
            header = (a, b)
            continue
        if not (0 <= a < header[0] and 0 <= b < header[0]):
            raise ParseError(f"vertex out of range in {line!r}", lineno)
        edges.append((a, b))
    if header is None:
        raise ParseError("missing 'n m' header", lineno + 1)
    if len(edges) != header[1]:
        raise ParseError(f"header announces {header[1]} edges, found {len(edges)}", lineno)
    return Graph(header[0], edges)


# ---------------------------------------------------------------------------
# graph6


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def write_graph6(g: Graph) -> bytes:
    """Standard graph6 encoding of a simple graph (no header, no newline)."""
    if not g.is_simple:
        raise GraphError("graph6 cannot represent loops or parallel edges")
    n = g.vertex_count
    adj = {(min(u, v), max(u, v)) for u, v in g.edges}
    bits = [1 if (i, j) in adj else 0 for j in range(n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(63 + int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6))
    return _encode_n(n) + body


def read_graph6(data: bytes | str) -> Graph:
    raw = data.encode() if isinstance(data, str) else bytes(data)
    raw = raw.strip()
    if raw.startswith(b">>graph6<<"):
        raw = raw[10:]
    if not raw:
        raise ParseError("empty graph6 string", 1)
    for pos, byte in enumerate(raw, 1):
        if not 63 <= byte <= 126:
            raise ParseError(f"byte {byte!r} outside graph6 range", pos)
    if raw[0] != 126:
        n, start = raw[0] - 63, 1
    elif len(raw) > 1 and raw[1] == 126:
        if len(raw) < 8:
            raise ParseError("truncated size field", len(raw))
        n, start = 0, 8
        for b in raw[2:8]:
            n = (n << 6) | (b - 63)
    else:
        if len(raw) < 4:
            raise ParseError("truncated size field", len(raw))
        n, start = 0, 4
        for b in raw[1:4]:
            n = (n << 6) | (b - 63)
    need = (n * (n - 1) // 2 + 5) // 6
    body = raw[start:]
    if len(body) != need:
        raise ParseError(f"expected {need} data bytes for n={n}, got {len(body)}", start + min(len(body), need) + 1)
    bits = []
    for b in body:
        v = b - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def read_graph(data: bytes | str, fmt: str = "EDGELIST") -> Graph:
    fmt = fmt.upper()
    if fmt == "EDGELIST":
        return read_edgelist(data)
    if fmt == "GRAPH6":
        return read_graph6(data)
    raise ValueError(f"unknown format {fmt!r}")


def write_graph(g: Graph, fmt: str = "EDGELIST") -> bytes:
    fmt = fmt.upper()
    if fmt == "EDGELIST":
        return write_edgelist(g)
    if fmt == "GRAPH6":
        return write_graph6(g)
    raise ValueError(f"unknown format {fmt!r}")
