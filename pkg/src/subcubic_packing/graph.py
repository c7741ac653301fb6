"""Multigraphs with stable edge ids, edge distances and structural predicates."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

INFINITY = math.inf


class GraphError(ValueError):
    """Raised on invalid graph input (bad ids, precondition failures)."""


@dataclass(frozen=True)
class Graph:
    """Finite multigraph on vertices ``0..vertex_count-1``.

    Edge ``i`` is ``edges[i]``; loops and parallel edges are allowed.
    Instances are immutable and hashable.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        edges = tuple((int(u), int(v)) for u, v in edges)
        if vertex_count < 0:
            raise GraphError("vertex_count must be non-negative")
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge {i} ({u}, {v}) has an endpoint out of range")
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", edges)

    def __repr__(self) -> str:
        return f"Graph({self.vertex_count}, {list(self.edges)!r})"

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex (a loop appears once)."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            if v != u:
                inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nbr: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbr[u].add(v)
            nbr[v].add(u)
        return tuple(frozenset(s) for s in nbr)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def is_subcubic(self) -> bool:
        return self.max_degree <= 3

    @property
    def is_cubic(self) -> bool:
        return self.vertex_count > 0 and all(d == 3 for d in self.degrees)

    @cached_property
    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges:
            if u == v:
                return False
            key = (min(u, v), max(u, v))
            if key in seen:
                return False
            seen.add(key)
        return True

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def check_edge(self, e: int) -> None:
        if not (isinstance(e, int) and 0 <= e < len(self.edges)):
            raise GraphError(f"invalid edge id {e!r}")

    @cached_property
    def vertex_distances(self) -> tuple[tuple[float, ...], ...]:
        """All-pairs BFS distances between vertices (``INFINITY`` if unreachable)."""
        return tuple(tuple(_bfs(self, s)) for s in range(self.vertex_count))

    @cached_property
    def edge_distances(self) -> tuple[tuple[float, ...], ...]:
        """Line-graph distance matrix over edge ids."""
        vd = self.vertex_distances
        m = len(self.edges)
        rows = []
        for e in range(m):
            a, b = self.edges[e]
            row = []
            for f in range(m):
                if e == f:
                    row.append(0)
                    continue
                c, d = self.edges[f]
                row.append(1 + min(vd[a][c], vd[a][d], vd[b][c], vd[b][d]))
            rows.append(tuple(row))
        return tuple(rows)

    def components(self) -> list[list[int]]:
        """Vertex sets of connected components, each sorted, in order of least vertex."""
        seen = [False] * self.vertex_count
        comps = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.neighbors[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int], list[int]]:
        """Subgraph induced by ``vertices``.

        Returns ``(subgraph, vertex_map, edge_map)`` where the maps send new ids to
        original ids.
        """
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        new_edges, emap = [], []
        for i, (u, v) in enumerate(self.edges):
            if u in index and v in index:
                new_edges.append((index[u], index[v]))
                emap.append(i)
        return Graph(len(vs), new_edges), vs, emap

    def without_edges(self, removed: Iterable[int]) -> tuple["Graph", list[int]]:
        """Same vertex set, listed edges deleted; returns the graph and new->old edge map."""
        gone = set(removed)
        keep = [i for i in range(len(self.edges)) if i not in gone]
        return Graph(self.vertex_count, [self.edges[i] for i in keep]), keep


def _bfs(g: Graph, source: int) -> list[float]:
    dist: list[float] = [INFINITY] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.neighbors[x]:
            if dist[y] == INFINITY:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def edge_distance(g: Graph, e: int, f: int) -> float:
    """Distance between edges ``e`` and ``f`` in the line graph of ``g``.

    Adjacent edges are at distance 1; edges in different components are at
    ``INFINITY``.
    """
    g.check_edge(e)
    g.check_edge(f)
    if e == f:
        return 0
    a, b = g.edges[e]
    # multi-source BFS from both endpoints of e
    dist: list[float] = [INFINITY] * g.vertex_count
    dist[a] = dist[b] = 0
    queue = deque({a, b})
    while queue:
        x = queue.popleft()
        for y in g.neighbors[x]:
            if dist[y] == INFINITY:
                dist[y] = dist[x] + 1
                queue.append(y)
    c, d = g.edges[f]
    return 1 + min(dist[c], dist[d])


def conflict_pairs(g: Graph, s: int) -> set[tuple[int, int]]:
    """Unordered pairs ``(e, f)``, ``e < f``, of distinct edges at distance at most ``s``."""
    if s < 1:
        raise GraphError("s must be a positive integer")
    dist = g.edge_distances
    m = g.edge_count
    return {(e, f) for e in range(m) for f in range(e + 1, m) if dist[e][f] <= s}


def conflict_masks(g: Graph, s: int) -> list[int]:
    """Bitmask form of :func:`conflict_pairs`: bit ``f`` of entry ``e`` is set iff they conflict."""
    dist = g.edge_distances
    m = g.edge_count
    masks = []
    for e in range(m):
        row = dist[e]
        mask = 0
        for f in range(m):
            if f != e and row[f] <= s:
                mask |= 1 << f
        masks.append(mask)
    return masks


def bridges(g: Graph) -> list[int]:
    """Edge ids of all bridges (iterative low-link; parallel edges are never bridges)."""
    n = g.vertex_count
    disc = [-1] * n
    low = [0] * n
    found = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # stack frames: (vertex, edge used to enter, iterator over incident edges)
        stack = [(root, -1, iter(g.incidence[root]))]
        while stack:
            v, parent_edge, it = stack[-1]
            advanced = False
            for e in it:
                if e == parent_edge:
                    continue
                w = g.other_end(e, v)
                if w == v:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, e, iter(g.incidence[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] > disc[p]:
                    found.append(parent_edge)
    return sorted(found)


def is_bridgeless(g: Graph) -> bool:
    """True iff the connected graph ``g`` has no bridge."""
    if not g.is_connected():
        raise GraphError("is_bridgeless expects a connected graph")
    return not bridges(g)


def is_matching(g: Graph, edge_ids: Iterable[int]) -> bool:
    used: set[int] = set()
    for e in edge_ids:
        g.check_edge(e)
        u, v = g.edges[e]
        if u == v or u in used or v in used:
            return False
        used.update((u, v))
    return True


class Contraction(NamedTuple):
    graph: Graph
    vertex_map: list[tuple[int, ...]]  # new vertex -> original vertices it stands for
    edge_map: list[int]  # new edge -> original edge id


def contract_class(g: Graph, X: Iterable[int]) -> Contraction:
    """Contract every edge of the matching ``X`` and drop the loops this creates."""
    X = sorted(set(X))
    if not is_matching(g, X):
        raise GraphError("contract_class expects a matching")
    rep = list(range(g.vertex_count))
    for e in X:
        u, v = g.edges[e]
        rep[max(u, v)] = min(u, v)
    reps = sorted(set(rep))
    index = {r: i for i, r in enumerate(reps)}
    members: list[list[int]] = [[] for _ in reps]
    for v in range(g.vertex_count):
        members[index[rep[v]]].append(v)
    in_x = set(X)
    new_edges, emap = [], []
    for i, (u, v) in enumerate(g.edges):
        if i in in_x:
            continue
        a, b = index[rep[u]], index[rep[v]]
        if a == b and u != v:
            continue  # loop created by contraction; original loops are kept
        new_edges.append((a, b))
        emap.append(i)
    return Contraction(Graph(len(reps), new_edges), [tuple(m) for m in members], emap)


class StructureStats(NamedTuple):
    max_degree: int
    girth: float
    edge_weights: tuple[int, ...]
    bipartite: bool


def girth(g: Graph) -> float:
    """Length of a shortest cycle (loops count 1, parallel pairs 2); ``INFINITY`` for forests."""
    if any(u == v for u, v in g.edges):
        return 1
    if not g.is_simple:
        return 2
    best: float = INFINITY
    for s in range(g.vertex_count):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors[x]:
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return False
    return True


def structure_stats(g: Graph) -> StructureStats:
    deg = g.degrees
    weights = tuple(deg[u] + deg[v] for u, v in g.edges)
    return StructureStats(g.max_degree, girth(g), weights, is_bipartite(g))


def shortest_cycle(g: Graph) -> list[int] | None:
    """Vertices of a shortest cycle of a simple graph in cyclic order, or ``None``.

    Ties go to the cycle through the lowest edge id, so the result is deterministic.
    """
    best: list[int] | None = None
    for e, (u, v) in enumerate(g.edges):
        # shortest u-v path avoiding edge e
        parent = {u: -1}
        queue = deque([u])
        while queue and v not in parent:
            x = queue.popleft()
            for f in g.incidence[x]:
                if f == e:
                    continue
                y = g.other_end(f, x)
                if y not in parent:
                    parent[y] = x
                    queue.append(y)
        if v not in parent:
            continue
        path = [v]
        while path[-1] != u:
            path.append(parent[path[-1]])
        if best is None or len(path) < len(best):
            best = path[::-1]
    return best


def find_edge(g: Graph, u: int, v: int) -> int | None:
    """Lowest edge id joining ``u`` and ``v``."""
    for e in g.incidence[u]:
        if g.other_end(e, u) == v:
            return e
    return None
